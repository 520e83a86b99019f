#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "smale/smale.h"

namespace fs = std::filesystem;

namespace {

enum Exit { ExitOk = 0, ExitInputError = 1, ExitRefused = 2 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  long max_genus = -1;
  std::string matching = "first-fit";
  std::string dot_kind = "hasse";
  unsigned threads = 1;
  int verbosity = 0;
};

struct Result {
  int exit = ExitOk;
  std::string text;     // primary document
  std::string message;  // diagnostics for stderr
};

// Owns a C string returned by the library.
struct Text {
  char* ptr = nullptr;
  ~Text() { smale_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct Order {
  smale_order* ptr = nullptr;
  ~Order() { smale_order_free(ptr); }
};

struct Certificate {
  smale_certificate* ptr = nullptr;
  ~Certificate() { smale_certificate_free(ptr); }
};

int exit_for(smale_status s) {
  if (s == SMALE_OK) return ExitOk;
  if (s == SMALE_REFUSED) return ExitRefused;
  return ExitInputError;
}

std::string read_text(const std::string& path, Result& r) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    r.exit = ExitInputError;
    r.message = "Io: cannot open '" + path + "'";
    return {};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

smale_options options_of(const RunConfig& cfg) {
  smale_options o = smale_default_options();
  o.matching = cfg.matching == "last-fit" ? SMALE_MATCH_LAST_FIT : SMALE_MATCH_FIRST_FIT;
  o.max_genus = cfg.max_genus;
  o.threads = cfg.threads;
  return o;
}

Result validate_certificate(const std::string& text) {
  Result r;
  Certificate cert;
  smale_status s = smale_certificate_parse(text.c_str(), &cert.ptr);
  if (s != SMALE_OK) return {ExitInputError, "", smale_last_error()};
  Text report;
  s = smale_certificate_verify(cert.ptr, &report.ptr);
  r.text = report.str();
  // A certificate that does not re-verify is bad input, not a refusal.
  if (s != SMALE_OK) {
    r.exit = ExitInputError;
    r.message = smale_last_error();
  } else {
    r.message = "certificate re-verified";
  }
  return r;
}

Result run_one(const RunConfig& cfg, const std::string& path) {
  Result r;
  const std::string text = read_text(path, r);
  if (r.exit != ExitOk) return r;

  if (cfg.command == "validate" && text.find("\"schema\"") != std::string::npos) return validate_certificate(text);

  Order order;
  if (smale_order_parse(text.c_str(), &order.ptr) != SMALE_OK) return {ExitInputError, "", smale_last_error()};
  const smale_options opts = options_of(cfg);

  Text out;
  smale_status s = SMALE_OK;
  if (cfg.command == "validate") {
    s = smale_order_report(order.ptr, &out.ptr);
  } else if (cfg.command == "check") {
    s = smale_check(order.ptr, &out.ptr);
  } else if (cfg.command == "plan-plugs") {
    s = smale_plan_plugs(order.ptr, &out.ptr);
  } else if (cfg.command == "gradient-like") {
    s = smale_gradient_like(order.ptr, &opts, &out.ptr);
  } else if (cfg.command == "export-dot") {
    const smale_dot_kind kind = cfg.dot_kind == "bands"       ? SMALE_DOT_BANDS
                                : cfg.dot_kind == "embedding" ? SMALE_DOT_EMBEDDING
                                                              : SMALE_DOT_HASSE;
    s = smale_export_dot(order.ptr, kind, &opts, &out.ptr);
  } else if (cfg.command == "realize") {
    Certificate cert;
    Text refusal;
    s = smale_realize(order.ptr, &opts, &cert.ptr, &refusal.ptr);
    if (s == SMALE_OK) {
      s = smale_certificate_json(cert.ptr, &out.ptr);
      if (cfg.verbosity > 0) {
        r.message = "chi=" + std::to_string(smale_certificate_euler_characteristic(cert.ptr)) +
                    " genus=" + std::to_string(smale_certificate_genus(cert.ptr));
      }
    } else if (s == SMALE_REFUSED) {
      r.text = refusal.str();
    }
  }
  r.exit = exit_for(s);
  if (s != SMALE_OK) {
    r.message = smale_last_error();
  }
  if (r.text.empty()) r.text = out.str();
  return r;
}

std::string extension_for(const RunConfig& cfg) { return cfg.command == "export-dot" ? ".dot" : ".json"; }

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("Io: cannot write '" + path + "'");
}

int run(const RunConfig& cfg) {
  if (!fs::is_directory(cfg.input)) {
    const Result r = run_one(cfg, cfg.input);
    if (!r.text.empty()) emit(cfg.output, r.text);
    if (!r.message.empty() && (r.exit != ExitOk || cfg.verbosity > 0)) std::cerr << r.message << "\n";
    return r.exit;
  }

  // Corpus mode: every *.json file, processed concurrently, reported in name order.
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(cfg.input)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end());
  std::vector<Result> results(inputs.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < inputs.size(); i += workers) results[i] = run_one(cfg, inputs[i].string());
    });
  }
  for (auto& t : pool) t.join();

  if (!cfg.output.empty()) fs::create_directories(cfg.output);
  int exit = ExitOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Result& r = results[i];
    const std::string stem = inputs[i].stem().string();
    if (!cfg.output.empty()) {
      if (!r.text.empty()) emit((fs::path(cfg.output) / (stem + extension_for(cfg))).string(), r.text);
    } else {
      std::cout << "== " << stem << " ==\n" << r.text;
    }
    std::cerr << stem << ": " << (r.exit == ExitOk ? "ok" : r.exit == ExitRefused ? "refused" : "error");
    if (!r.message.empty() && (r.exit != ExitOk || cfg.verbosity > 0)) std::cerr << " (" << r.message << ")";
    std::cerr << "\n";
    if (r.exit == ExitInputError) {
      exit = ExitInputError;
    } else if (r.exit == ExitRefused && exit == ExitOk) {
      exit = ExitRefused;
    }
  }
  return exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realize finite partial orders as Smale orders of surface diffeomorphisms"};
  app.set_version_flag("--version", std::string(smale_version()));
  app.require_subcommand(0, 1);

  // One config per subcommand; CLI11 options must not share storage.
  std::vector<RunConfig> configs(6);
  std::string seed_dir;
  app.add_option("--seed-corpus", seed_dir, "Write the worked example orders into DIR and exit");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Validate an order (report roles and covers) or re-verify a certificate"},
      {"check", "Connectivity condition and necessary-condition rules"},
      {"realize", "Run the full construction and emit a realization certificate"},
      {"plan-plugs", "Plug entry/exit counts and gluing schedule"},
      {"gradient-like", "Decide realizability by a gradient-like diffeomorphism"},
      {"export-dot", "Render the Hasse diagram, band incidence graph or embedding as DOT"},
  };
  for (std::size_t c = 0; c < commands.size(); ++c) {
    const auto& [name, help] = commands[c];
    RunConfig& cfg = configs[c];
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", cfg.input, "Order spec (or certificate) file, or a directory of them")
        ->required()
        ->check(CLI::ExistingPath);
    sub->add_option("-o,--output", cfg.output, "Output file (directory in corpus mode); stdout if omitted");
    sub->add_option("--matching", cfg.matching, "Band matching strategy")
        ->check(CLI::IsMember({"first-fit", "last-fit"}));
    sub->add_option("--max-genus", cfg.max_genus, "Genus bound for embeddings (default: number of edges)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("-v,--verbose", cfg.verbosity, "More diagnostics on stderr");
    if (name == "export-dot") {
      sub->add_option("--kind", cfg.dot_kind, "What to render")->check(CLI::IsMember({"hasse", "bands", "embedding"}));
    }
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  RunConfig cfg;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitOk : ExitInputError;
  }

  for (const auto& c : configs) {
    if (!c.command.empty()) cfg = c;
  }
  try {
    if (!seed_dir.empty()) {
      Text files;
      if (smale_write_seed_corpus(seed_dir.c_str(), &files.ptr) != SMALE_OK) {
        std::cerr << smale_last_error() << "\n";
        return ExitInputError;
      }
      std::cout << files.str();
      if (cfg.command.empty()) return ExitOk;
    }
    if (cfg.command.empty()) {
      std::cerr << app.help();
      return ExitInputError;
    }
    return run(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitInputError;
  }
}
