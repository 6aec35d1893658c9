// glossgraft command-line front end. Talks to the library only through the
// C API.
//
// Settings are resolved per key: command-line flag, then environment
// variable, then config file (TOML; "[run] workers = 4" or top-level keys).

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glossgraft/glossgraft.h"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  gg_status status;
  ApiError(gg_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(gg_status status, const char* what) {
  if (status == GG_OK) return;
  std::string msg = std::string(what) + ": " + gg_status_name(status);
  const char* detail = gg_last_error();
  if (detail && *detail) msg += ": " + std::string(detail);
  throw ApiError(status, msg);
}

void log(const std::string& line) { std::fprintf(stderr, "glossgraft: %s\n", line.c_str()); }

// Owns a string returned by the library.
struct GgString {
  char* p = nullptr;
  ~GgString() { gg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using WordNetPtr = std::unique_ptr<gg_wordnet, decltype(&gg_wordnet_free)>;
using StoplistPtr = std::unique_ptr<gg_stoplist, decltype(&gg_stoplist_free)>;
using VariantPtr = std::unique_ptr<gg_variant, decltype(&gg_variant_free)>;

const std::map<std::string, const char*> kEnv = {
    {"wordnet", "GLOSSGRAFT_WORDNET"},
    {"stoplist", "GLOSSGRAFT_STOPLIST"},
    {"workers", "GLOSSGRAFT_WORKERS"},
};

class Settings {
 public:
  void load_config(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) throw UsageError("cannot open config file " + path);
    std::vector<CLI::ConfigItem> items;
    try {
      items = CLI::ConfigTOML().from_file(path);
    } catch (const CLI::Error& e) {
      throw UsageError("config file " + path + ": " + e.what());
    }
    for (const auto& item : items) {
      if (item.name == "++" || item.name == "--") continue;  // section markers
      std::string key;
      for (const auto& p : item.parents) key += p + ".";
      key += item.name;
      std::string value;
      for (const auto& in : item.inputs) value += (value.empty() ? "" : ",") + in;
      config_[key] = value;
    }
  }

  void bind(CLI::App* sub) { sub_ = sub; }

  std::optional<std::string> get(const std::string& key) const {
    if (auto* opt = sub_->get_option_no_throw("--" + key); opt && opt->count() > 0) {
      if (opt->get_expected_min() == 0) return std::string("true");
      return opt->as<std::string>();
    }
    if (auto env = kEnv.find(key); env != kEnv.end()) {
      if (const char* v = std::getenv(env->second); v && *v) return std::string(v);
    }
    if (auto it = config_.find(sub_->get_name() + "." + key); it != config_.end()) return it->second;
    if (auto it = config_.find(key); it != config_.end()) return it->second;
    return std::nullopt;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw UsageError("--" + key + " is required (flag, environment or config file)");
    return *v;
  }

  std::optional<unsigned long long> number(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_number(key, *v);
  }

  std::optional<double> real(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    try {
      std::size_t used = 0;
      double d = std::stod(*v, &used);
      if (used == v->size()) return d;
    } catch (const std::exception&) {
    }
    throw UsageError("--" + key + ": not a number: '" + *v + "'");
  }

  bool flag(const std::string& key) const {
    auto v = get(key);
    if (!v) return false;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw UsageError("--" + key + ": expected a boolean, got '" + *v + "'");
  }

  static unsigned long long parse_number(const std::string& key, const std::string& text) {
    unsigned long long n = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || end != text.data() + text.size())
      throw UsageError("--" + key + ": not a non-negative integer: '" + text + "'");
    return n;
  }

 private:
  CLI::App* sub_ = nullptr;
  std::map<std::string, std::string> config_;
};

void write_output(const Settings& s, const std::string& data) {
  if (auto out = s.get("out")) {
    std::ofstream f(*out, std::ios::binary);
    if (!f) throw ApiError(GG_ERR_IO, "cannot write " + *out);
    f << data;
    if (!f) throw ApiError(GG_ERR_IO, "write failed: " + *out);
    log("wrote " + *out);
  } else {
    std::fwrite(data.data(), 1, data.size(), stdout);
    std::fflush(stdout);
  }
}

WordNetPtr open_wordnet(const Settings& s) {
  auto dir = s.require("wordnet");
  gg_wordnet* wn = nullptr;
  check(gg_wordnet_load(dir.c_str(), &wn), "loading WordNet");
  log("WordNet " + dir + ": " + std::to_string(gg_wordnet_synset_count(wn, 'n')) + " nouns, " +
      std::to_string(gg_wordnet_synset_count(wn, 'v')) + " verbs");
  return WordNetPtr(wn, gg_wordnet_free);
}

StoplistPtr open_stoplist(const Settings& s) {
  auto path = s.require("stoplist");
  gg_stoplist* stop = nullptr;
  check(gg_stoplist_load(path.c_str(), &stop), "loading stoplist");
  log("stoplist " + path + ": " + std::to_string(gg_stoplist_size(stop)) + " words");
  return StoplistPtr(stop, gg_stoplist_free);
}

unsigned workers_of(const Settings& s) {
  auto n = s.number("workers").value_or(1);
  if (n == 0 || n > 1024) throw UsageError("--workers must be between 1 and 1024");
  return static_cast<unsigned>(n);
}

void log_stats(const gg_run_stats& st) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu entries, %zu attached, %zu failed; pool %zu candidates, %zu scored, "
                "pruning rate %.4f; %.2fs",
                st.entries, st.attached, st.failed, st.pool_size, st.candidates_scored,
                st.pruning_rate, st.seconds);
  log(buf);
}

void log_failures(const std::string& failures) {
  std::size_t start = 0;
  while (start < failures.size()) {
    auto end = failures.find('\n', start);
    if (end == std::string::npos) end = failures.size();
    if (end > start) log("failed: " + failures.substr(start, end - start));
    start = end + 1;
  }
}

int cmd_run(const Settings& s) {
  auto wn = open_wordnet(s);
  auto stop = open_stoplist(s);
  gg_variant* raw = nullptr;
  check(gg_variant_create(s.require("variant").c_str(), &raw), "variant");
  VariantPtr variant(raw, gg_variant_free);
  if (auto n = s.number("gloss-size")) check(gg_variant_set_gloss_size(raw, *n), "--gloss-size");
  gg_variant_set_entry_compounds(raw, s.flag("entry-compounds") ? 1 : 0);

  gg_run_options opts{workers_of(s), 0, 0.0};
  if (auto t = s.real("attach-threshold")) {
    opts.use_attach_threshold = 1;
    opts.attach_threshold = *t;
  }
  auto entries = s.require("entries");
  log(std::string("running ") + gg_variant_name(raw) + " on " + entries + " with " +
      std::to_string(opts.workers) + " worker(s)");
  GgString preds, failures;
  gg_run_stats stats{};
  check(gg_run(wn.get(), stop.get(), raw, &opts, entries.c_str(), &preds.p, &failures.p, &stats),
        "run");
  log_failures(failures.str());
  log_stats(stats);
  write_output(s, preds.str());
  return 0;
}

int cmd_baseline(const Settings& s, const std::string& kind) {
  auto wn = open_wordnet(s);
  auto entries = s.require("entries");
  auto seed = s.number("seed").value_or(0);
  GgString preds, failures;
  gg_run_stats stats{};
  check(gg_baseline(wn.get(), kind.c_str(), seed, workers_of(s), entries.c_str(), &preds.p,
                    &failures.p, &stats),
        "baseline");
  log_failures(failures.str());
  log_stats(stats);
  write_output(s, preds.str());
  return 0;
}

int cmd_eval(const Settings& s) {
  auto wn = open_wordnet(s);
  auto preds = s.require("predictions");
  auto gold = s.require("gold");
  GgString json, table;
  check(gg_evaluate(wn.get(), preds.c_str(), gold.c_str(), &json.p, &table.p), "eval");
  std::fputs(table.str().c_str(), stderr);
  write_output(s, json.str());
  return 0;
}

int cmd_sweep(const Settings& s) {
  auto wn = open_wordnet(s);
  auto stop = open_stoplist(s);
  std::vector<std::size_t> sizes;
  auto text = s.get("sizes").value_or("1,5,9,10,20,30,40,50,100");
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    auto n = Settings::parse_number("sizes", text.substr(start, end - start));
    if (n == 0) throw UsageError("--sizes: gloss sizes must be positive");
    sizes.push_back(n);
    start = end + 1;
  }
  gg_sweep_options opts{workers_of(s), s.flag("all-pos") ? 1 : 0, s.flag("per-synset") ? 1 : 0};
  GgString json, table;
  check(gg_sweep(wn.get(), stop.get(), sizes.data(), sizes.size(), s.require("entries").c_str(),
                 s.require("gold").c_str(), &opts, &json.p, &table.p),
        "sweep");
  std::fputs(table.str().c_str(), stderr);
  write_output(s, json.str());
  return 0;
}

int cmd_fixture_check(const Settings& s) {
  auto wn = open_wordnet(s);
  auto stop = open_stoplist(s);
  GgString report;
  auto status = gg_fixture_check(wn.get(), stop.get(), &report.p);
  std::fputs(report.str().c_str(), stdout);
  if (status == GG_ERR_FIXTURE_MISMATCH) {
    log("fixture mismatch");
    return 1;
  }
  check(status, "fixture-check");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attach dictionary senses to WordNet by gloss overlap.", "glossgraft"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", gg_version());
  std::string config_path;
  app.add_option("--config", config_path, "TOML config file (flags and env take precedence)")
      ->type_name("FILE");

  auto wordnet = [&](CLI::App* sub) {
    sub->add_option("--wordnet", "WordNet 3.0 dict directory [env GLOSSGRAFT_WORDNET]")
        ->type_name("DIR");
  };
  auto stoplist = [&](CLI::App* sub) {
    sub->add_option("--stoplist", "stoplist file [env GLOSSGRAFT_STOPLIST]")
        ->type_name("FILE");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", "output file (default: standard output)")->type_name("FILE");
  };
  auto workers = [&](CLI::App* sub) {
    sub->add_option("--workers", "worker threads [env GLOSSGRAFT_WORKERS]")
        ->type_name("N");
  };

  auto* run = app.add_subcommand("run", "attach every entry with a Duluth variant");
  wordnet(run);
  stoplist(run);
  run->add_option("--variant", "duluth1, duluth2, duluth3 or duluth4")->type_name("NAME");
  run->add_option("--gloss-size", "duluth1 truncation length")->type_name("N");
  run->add_option("--entries", "entries (TSV or JSON lines)")->type_name("FILE");
  run->add_option("--attach-threshold", "scores below T become attach operations")
      ->type_name("T");
  run->add_flag("--entry-compounds", "also mark WordNet compounds in entry glosses");
  workers(run);
  common(run);

  auto* baseline = app.add_subcommand("baseline", "first-word or random placement");
  std::string baseline_kind;
  baseline->add_option("kind", baseline_kind, "first-word or random")
      ->required()
      ->check(CLI::IsMember({"first-word", "random"}));
  wordnet(baseline);
  baseline->add_option("--entries", "entries (TSV or JSON lines)")->type_name("FILE");
  baseline->add_option("--seed", "seed for the random baseline")->type_name("N");
  workers(baseline);
  common(baseline);

  auto* eval = app.add_subcommand("eval", "score predictions against a gold file");
  wordnet(eval);
  eval->add_option("--predictions", "prediction TSV")->type_name("FILE");
  eval->add_option("--gold", "gold TSV")->type_name("FILE");
  common(eval);

  auto* sweep = app.add_subcommand("sweep", "duluth1 gloss-size sweep");
  wordnet(sweep);
  stoplist(sweep);
  sweep->add_option("--entries", "entries (TSV or JSON lines)")->type_name("FILE");
  sweep->add_option("--gold", "gold TSV")->type_name("FILE");
  sweep->add_option("--sizes", "comma-separated gloss sizes")->type_name("LIST");
  sweep->add_flag("--all-pos", "count tokens over every part of speech");
  sweep->add_flag("--per-synset", "count each synset once rather than once per sense");
  workers(sweep);
  common(sweep);

  auto* fixture = app.add_subcommand("fixture-check", "regenerate the feline#n#1 fixtures");
  wordnet(fixture);
  stoplist(fixture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Settings settings;
  try {
    if (!config_path.empty()) settings.load_config(config_path);
    if (run->parsed()) return settings.bind(run), cmd_run(settings);
    if (baseline->parsed()) return settings.bind(baseline), cmd_baseline(settings, baseline_kind);
    if (eval->parsed()) return settings.bind(eval), cmd_eval(settings);
    if (sweep->parsed()) return settings.bind(sweep), cmd_sweep(settings);
    if (fixture->parsed()) return settings.bind(fixture), cmd_fixture_check(settings);
  } catch (const UsageError& e) {
    log(std::string("error: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return 1;
  }
  return 2;
}
