#include "blochcomp/blochcomp.h"

#include <cstring>
#include <new>
#include <string>

#include "runner.hpp"

struct bc_document {
  blochcomp::spec::MapSpecDocument doc;
};

struct bc_result {
  blochcomp::run::Outcome outcome;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error_message, const std::string& what) {
  if (error_message) *error_message = dup_string(what);
}

}  // namespace

extern "C" {

void bc_options_init(bc_options* options) {
  if (options) *options = bc_options{};
}

bc_status bc_document_parse(const char* json_text, bc_document** out,
                            char** error_message) {
  if (error_message) *error_message = nullptr;
  if (!json_text || !out) {
    set_error(error_message, "null argument");
    return BC_ERR_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto doc = std::make_unique<bc_document>();
    doc->doc = blochcomp::spec::parse_spec(json_text);
    *out = doc.release();
    return BC_OK;
  } catch (const blochcomp::spec::ParseError& e) {
    set_error(error_message, e.what());
    return BC_ERR_PARSE;
  } catch (const std::exception& e) {
    set_error(error_message, e.what());
    return BC_ERR_INTERNAL;
  }
}

void bc_document_free(bc_document* doc) { delete doc; }

bc_status bc_run(const bc_document* doc, const char* command,
                 const bc_options* options, bc_result** out,
                 char** error_message) {
  if (error_message) *error_message = nullptr;
  if (!doc || !command || !out) {
    set_error(error_message, "null argument");
    return BC_ERR_ARGUMENT;
  }
  *out = nullptr;

  blochcomp::run::Options opts;
  if (options) {
    if (options->has_alpha) opts.alpha = options->alpha;
    if (options->has_c) opts.c = options->c;
    if (options->has_r) opts.r = options->r;
    if (options->has_r0) opts.r0 = options->r0;
    if (options->has_kmax) opts.k_max = options->kmax;
  }

  try {
    auto result = std::make_unique<bc_result>();
    result->outcome = blochcomp::run::run_command(doc->doc, command, opts);
    *out = result.release();
    return BC_OK;
  } catch (const blochcomp::run::InputError& e) {
    set_error(error_message, e.what());
    return BC_ERR_DOMAIN;
  } catch (const blochcomp::fn::DomainError& e) {
    set_error(error_message, e.what());
    return BC_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(error_message, e.what());
    return BC_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(error_message, e.what());
    return BC_ERR_INTERNAL;
  }
}

int bc_result_exit_code(const bc_result* result) {
  return result ? result->outcome.exit_code : 1;
}

const char* bc_result_text(const bc_result* result) {
  return result ? result->outcome.text.c_str() : "";
}

int bc_result_artifact_count(const bc_result* result) {
  return result ? static_cast<int>(result->outcome.artifacts.size()) : 0;
}

const char* bc_result_artifact_name(const bc_result* result, int index) {
  if (!result || index < 0 ||
      index >= static_cast<int>(result->outcome.artifacts.size()))
    return nullptr;
  return result->outcome.artifacts[static_cast<std::size_t>(index)].name.c_str();
}

const char* bc_result_artifact_data(const bc_result* result, int index) {
  if (!result || index < 0 ||
      index >= static_cast<int>(result->outcome.artifacts.size()))
    return nullptr;
  return result->outcome.artifacts[static_cast<std::size_t>(index)].data.c_str();
}

void bc_result_free(bc_result* result) { delete result; }

void bc_string_free(char* text) { delete[] text; }

const char* bc_version(void) { return "1.0.0"; }

}  // extern "C"
