#include "smale/smale.h"

#include <cstring>
#include <filesystem>
#include <functional>
#include <string>

#include "smale/corpus.hpp"
#include "smale/dot.hpp"
#include "smale/io.hpp"
#include "smale/verify.hpp"

struct smale_order {
  smale::OrderDocument document;
};

struct smale_certificate {
  smale::RealizationCertificate certificate;
};

namespace {

thread_local std::string last_error;

smale_status status_of(smale::ErrorCode code) {
  using smale::ErrorCode;
  switch (code) {
    case ErrorCode::Io: return SMALE_ERR_IO;
    case ErrorCode::Parse: return SMALE_ERR_PARSE;
    case ErrorCode::DuplicateElement:
    case ErrorCode::UnknownElementInRelation:
    case ErrorCode::CycleInRelation:
    case ErrorCode::IsolatedElement: return SMALE_ERR_INVALID_ORDER;
    case ErrorCode::NotExtremal:
    case ErrorCode::ConnectivityFailure:
    case ErrorCode::NoMediator:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::StarViolated:
    case ErrorCode::NotGradientShape:
    case ErrorCode::DisconnectedGraph: return SMALE_ERR_PRECONDITION;
    case ErrorCode::InvalidArgument: return SMALE_ERR_INVALID_ARGUMENT;
    case ErrorCode::ExhaustionFailure:
    case ErrorCode::NonIntegralGenus:
    case ErrorCode::Internal: return SMALE_ERR_INTERNAL;
  }
  return SMALE_ERR_INTERNAL;
}

smale_status guarded(const std::function<smale_status()>& body) {
  try {
    smale_status s = body();
    if (s == SMALE_OK) last_error.clear();
    return s;
  } catch (const smale::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SMALE_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SMALE_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

smale_status require(bool ok, const char* what) {
  if (ok) return SMALE_OK;
  last_error = std::string("InvalidArgument: ") + what;
  return SMALE_ERR_INVALID_ARGUMENT;
}

smale::MatchingStrategy strategy_of(const smale_options* options) {
  return options && options->matching == SMALE_MATCH_LAST_FIT ? smale::MatchingStrategy::LastFit
                                                               : smale::MatchingStrategy::FirstFit;
}

std::optional<std::size_t> max_genus_of(const smale_options* options) {
  if (!options || options->max_genus < 0) return std::nullopt;
  return static_cast<std::size_t>(options->max_genus);
}

std::size_t threads_of(const smale_options* options) {
  return options && options->threads > 0 ? options->threads : 1;
}

// Gradient-like verdict, or a refusal document when the order does not have
// the shape of a gradient-like diffeomorphism's order.
smale_status gradient(const smale_order* order, const smale_options* options, smale::GradientVerdict* verdict,
                      smale::Json* refusal) {
  try {
    *verdict = smale::check_gradient_like(order->document.order, max_genus_of(options), threads_of(options));
    return verdict->realizable ? SMALE_OK : SMALE_REFUSED;
  } catch (const smale::Error& e) {
    if (e.code() != smale::ErrorCode::NotGradientShape && e.code() != smale::ErrorCode::DisconnectedGraph) throw;
    *refusal = {{"verdict", e.code() == smale::ErrorCode::NotGradientShape ? "not-gradient-shape"
                                                                           : "disconnected-level-graph"},
                {"reason", e.what()}};
    last_error = e.what();
    return SMALE_REFUSED;
  }
}

}  // namespace

extern "C" {

const char* smale_version(void) { return SMALE_VERSION_STRING; }

smale_options smale_default_options(void) { return smale_options{SMALE_MATCH_FIRST_FIT, -1, 1}; }

const char* smale_last_error(void) { return last_error.c_str(); }

void smale_string_free(char* text) { std::free(text); }

smale_status smale_order_parse(const char* text, smale_order** out) {
  return guarded([&] {
    if (auto s = require(text && out, "null argument")) return s;
    *out = new smale_order{smale::parse_order_document(text)};
    return SMALE_OK;
  });
}

smale_status smale_order_load(const char* path, smale_order** out) {
  return guarded([&] {
    if (auto s = require(path && out, "null argument")) return s;
    *out = new smale_order{smale::parse_order_document(smale::read_file(path))};
    return SMALE_OK;
  });
}

void smale_order_free(smale_order* order) { delete order; }

smale_status smale_order_report(const smale_order* order, char** json_out) {
  return guarded([&] {
    if (auto s = require(order && json_out, "null argument")) return s;
    *json_out = copy_string(smale::dump(smale::order_report_json(order->document.order)));
    return SMALE_OK;
  });
}

smale_status smale_check(const smale_order* order, char** json_out) {
  return guarded([&] {
    if (auto s = require(order && json_out, "null argument")) return s;
    const smale::FiniteOrder& o = order->document.order;
    const auto connectivity = smale::check_connectivity(o);
    const auto violations = smale::check_necessary(o);
    smale::Json doc = {{"connectivity", smale::connectivity_json(o, connectivity)},
                       {"necessary_conditions", smale::violations_json(o, violations)}};
    *json_out = copy_string(smale::dump(doc));
    if (connectivity.passed() && violations.empty()) return SMALE_OK;
    last_error = "order fails the connectivity condition";
    return SMALE_REFUSED;
  });
}

smale_status smale_plan_plugs(const smale_order* order, char** json_out) {
  return guarded([&] {
    if (auto s = require(order && json_out, "null argument")) return s;
    const smale::FiniteOrder& o = order->document.order;
    *json_out = copy_string(smale::dump(smale::plug_plan_json(o, smale::plan_plugs(o))));
    return SMALE_OK;
  });
}

smale_status smale_gradient_like(const smale_order* order, const smale_options* options, char** json_out) {
  return guarded([&] {
    if (auto s = require(order && json_out, "null argument")) return s;
    smale::GradientVerdict verdict;
    smale::Json refusal;
    const smale_status s = gradient(order, options, &verdict, &refusal);
    if (!refusal.is_null()) {
      *json_out = copy_string(smale::dump(refusal));
    } else {
      *json_out = copy_string(smale::dump(smale::gradient_json(order->document.order, verdict)));
      if (s == SMALE_REFUSED) last_error = "no good embedding up to the genus bound";
    }
    return s;
  });
}

smale_status smale_realize(const smale_order* order, const smale_options* options,
                           smale_certificate** certificate_out, char** refusal_json_out) {
  return guarded([&] {
    if (auto s = require(order && certificate_out, "null argument")) return s;
    *certificate_out = nullptr;
    if (refusal_json_out) *refusal_json_out = nullptr;
    smale::RealizeOptions opts;
    opts.strategy = strategy_of(options);
    opts.cycles = order->document.cycles;
    auto outcome = smale::realize(order->document.order, opts);
    if (auto* refusal = std::get_if<smale::Refusal>(&outcome)) {
      last_error = refusal->stage + ": " + refusal->reason;
      if (refusal_json_out) {
        *refusal_json_out = copy_string(smale::dump(smale::refusal_json(order->document.order, *refusal)));
      }
      return SMALE_REFUSED;
    }
    *certificate_out = new smale_certificate{std::move(std::get<smale::RealizationCertificate>(outcome))};
    return SMALE_OK;
  });
}

smale_status smale_certificate_parse(const char* text, smale_certificate** out) {
  return guarded([&] {
    if (auto s = require(text && out, "null argument")) return s;
    smale::Json doc;
    try {
      doc = smale::Json::parse(text);
    } catch (const smale::Json::parse_error& e) {
      smale::raise(smale::ErrorCode::Parse, e.what());
    }
    *out = new smale_certificate{smale::certificate_from_json(doc)};
    return SMALE_OK;
  });
}

smale_status smale_certificate_json(const smale_certificate* certificate, char** json_out) {
  return guarded([&] {
    if (auto s = require(certificate && json_out, "null argument")) return s;
    *json_out = copy_string(smale::dump(smale::certificate_json(certificate->certificate)));
    return SMALE_OK;
  });
}

smale_status smale_certificate_verify(const smale_certificate* certificate, char** json_out) {
  return guarded([&] {
    if (auto s = require(certificate && json_out, "null argument")) return s;
    const auto report = smale::verify_certificate(certificate->certificate);
    smale::Json doc = {{"passed", report.passed()}, {"checks", report.checks}, {"failures", report.failures}};
    *json_out = copy_string(smale::dump(doc));
    if (report.passed()) return SMALE_OK;
    last_error = "certificate does not re-verify: " + report.failures.front();
    return SMALE_REFUSED;
  });
}

long smale_certificate_euler_characteristic(const smale_certificate* certificate) {
  return certificate ? static_cast<long>(certificate->certificate.euler_characteristic) : 0;
}

long smale_certificate_genus(const smale_certificate* certificate) {
  return certificate ? static_cast<long>(certificate->certificate.genus) : -1;
}

void smale_certificate_free(smale_certificate* certificate) { delete certificate; }

smale_status smale_export_dot(const smale_order* order, smale_dot_kind kind, const smale_options* options,
                              char** dot_out) {
  return guarded([&] {
    if (auto s = require(order && dot_out, "null argument")) return s;
    const smale::FiniteOrder& o = order->document.order;
    switch (kind) {
      case SMALE_DOT_HASSE:
        *dot_out = copy_string(smale::hasse_dot(o));
        return SMALE_OK;
      case SMALE_DOT_BANDS: {
        smale::RealizeOptions opts;
        opts.strategy = strategy_of(options);
        opts.cycles = order->document.cycles;
        auto outcome = smale::realize(o, opts);
        if (auto* refusal = std::get_if<smale::Refusal>(&outcome)) {
          last_error = refusal->stage + ": " + refusal->reason;
          return SMALE_REFUSED;
        }
        *dot_out = copy_string(smale::band_incidence_dot(std::get<smale::RealizationCertificate>(outcome)));
        return SMALE_OK;
      }
      case SMALE_DOT_EMBEDDING: {
        smale::GradientVerdict verdict;
        smale::Json refusal;
        const smale_status s = gradient(order, options, &verdict, &refusal);
        if (s != SMALE_OK) {
          if (refusal.is_null()) last_error = "no good embedding up to the genus bound";
          return s;
        }
        *dot_out = copy_string(smale::embedding_dot(o, verdict.graphs.highest, verdict.witness->embedding));
        return SMALE_OK;
      }
    }
    return require(false, "unknown dot kind");
  });
}

smale_status smale_write_seed_corpus(const char* directory, char** file_list_json_out) {
  return guarded([&] {
    if (auto s = require(directory != nullptr, "null argument")) return s;
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) smale::raise(smale::ErrorCode::Io, "cannot create '" + std::string(directory) + "': " + ec.message());
    smale::Json files = smale::Json::array();
    for (const auto& entry : smale::seed_corpus()) {
      const std::string path = (std::filesystem::path(directory) / (entry.name + ".json")).string();
      smale::write_file(path, smale::dump(entry.document));
      files.push_back({{"name", entry.name}, {"path", path}, {"description", entry.description}});
    }
    if (file_list_json_out) *file_list_json_out = copy_string(smale::dump(files));
    return SMALE_OK;
  });
}

}  // extern "C"
