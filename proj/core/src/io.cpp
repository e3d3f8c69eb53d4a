#include "belt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "belt/decode.hpp"
#include "belt/errors.hpp"
#include "belt/solvers.hpp"

namespace belt::io {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + file.string() + "'");
  return std::move(buf).str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write '" + file.string() + "'");
  out << text;
  out.close();
  if (!out) throw IoError("error writing '" + file.string() + "'");
}

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON in " + what);
  return j;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string read_text(const std::filesystem::path& file) { return read_file(file); }

void write_text(const std::filesystem::path& file, const std::string& text) {
  write_file(file, text);
}

Instance instance_from_json_text(const std::string& text) {
  json j = parse(text, "instance");
  if (!j.is_object() || !j.contains("slots") || !j.contains("types") || !j["types"].is_array()) {
    throw InvalidInstance("instance JSON needs 'slots' and a 'types' array");
  }
  RawInstance raw;
  try {
    raw.slots = j["slots"].get<long>();
    for (const json& t : j["types"]) {
      raw.types.push_back({t.at("id").get<std::string>(), t.at("demand").get<long>(),
                           t.at("capacity").get<long>()});
    }
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("bad instance JSON: ") + e.what());
  }
  return validate_instance(raw).instance;
}

std::string instance_to_json_text(const Instance& inst) {
  json types = json::array();
  for (const TypeSpec& t : inst.types()) {
    types.push_back({{"id", t.id}, {"demand", t.demand}, {"capacity", t.capacity}});
  }
  json j{{"slots", inst.slots()}, {"types", types}};
  return j.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& file) {
  return instance_from_json_text(read_file(file));
}

void save_instance(const Instance& inst, const std::filesystem::path& file) {
  write_file(file, instance_to_json_text(inst));
}

InjectionSequence sequence_from_json_text(const Instance& inst, const std::string& text) {
  json j = parse(text, "sequence");
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw Error("sequence JSON needs an 'entries' array");
  }
  InjectionSequence seq;
  for (const json& e : j["entries"]) {
    if (!e.is_string()) throw Error("sequence entries must be type ids");
    auto t = inst.find(e.get<std::string>());
    if (!t) throw MissingType("sequence refers to unknown type '" + e.get<std::string>() + "'");
    seq.entries.push_back(*t);
  }
  return seq;
}

std::string sequence_to_json_text(const Instance& inst, const InjectionSequence& seq) {
  json entries = json::array();
  for (TypeIndex t : seq.entries) entries.push_back(inst.type(t).id);
  return json{{"entries", entries}}.dump(2) + "\n";
}

InjectionSequence load_sequence(const Instance& inst, const std::filesystem::path& file) {
  return sequence_from_json_text(inst, read_file(file));
}

void save_sequence(const Instance& inst, const InjectionSequence& seq,
                   const std::filesystem::path& file) {
  write_file(file, sequence_to_json_text(inst, seq));
}

TimestampLog load_log(const std::filesystem::path& file) {
  std::string text = read_file(file);
  std::istringstream in(text);
  TimestampLog log;
  std::string line;
  bool have_header = false;
  long lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("'" + file.string() + "' line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string meta = line.substr(1);
      if (!meta.empty() && meta[0] == ' ') meta = meta.substr(1);
      auto eq = meta.find('=');
      if (eq == std::string::npos) fail("malformed comment, expected key=value");
      std::string key = meta.substr(0, eq);
      std::string value = meta.substr(eq + 1);
      if (key == "job_id") log.job_id = value;
      else if (key == "start_s") log.start_s = std::stol(value);
      else if (key == "end_s") log.end_s = std::stol(value);
      else fail("unknown log metadata '" + key + "'");
      continue;
    }
    if (!have_header) {
      if (line != "time_s,mould_id,type") fail("expected header 'time_s,mould_id,type'");
      have_header = true;
      continue;
    }
    auto c1 = line.find(',');
    auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos) fail("expected three comma-separated fields");
    LogEvent e;
    try {
      e.time_s = std::stol(line.substr(0, c1));
    } catch (const std::exception&) {
      fail("bad time_s value");
    }
    e.mould_id = line.substr(c1 + 1, c2 - c1 - 1);
    e.type = line.substr(c2 + 1);
    if (e.mould_id.empty() || e.type.empty()) fail("empty mould_id or type");
    log.events.push_back(std::move(e));
  }
  if (!have_header) throw Error("'" + file.string() + "': missing CSV header");
  return log;
}

void save_log(const TimestampLog& log, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "# job_id=" << log.job_id << "\n";
  out << "# start_s=" << log.start_s << "\n";
  out << "# end_s=" << log.end_s << "\n";
  out << "time_s,mould_id,type\n";
  for (const LogEvent& e : log.events) {
    if (e.mould_id.find_first_of(",\n") != std::string::npos ||
        e.type.find_first_of(",\n") != std::string::npos) {
      throw Error("mould or type ids with commas cannot be written to CSV");
    }
    out << e.time_s << "," << e.mould_id << "," << e.type << "\n";
  }
  write_file(file, out.str());
}

CorpusProfile profile_from_json_text(const std::string& text) {
  json j = parse(text, "profile");
  if (!j.is_object()) throw Error("profile JSON must be an object");
  static const char* known[] = {"job_count",      "type_count_range", "demand_mean",
                                "demand_dispersion", "capacity_range", "slots", "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw Error("unknown profile field '" + it.key() + "'");
  }
  CorpusProfile p;
  try {
    p.job_count = j.value("job_count", p.job_count);
    if (j.contains("type_count_range")) {
      p.type_count_range = {j["type_count_range"].at(0).get<long>(),
                            j["type_count_range"].at(1).get<long>()};
    }
    p.demand_mean = j.value("demand_mean", p.demand_mean);
    p.demand_dispersion = j.value("demand_dispersion", p.demand_dispersion);
    if (j.contains("capacity_range")) {
      p.capacity_range = {j["capacity_range"].at(0).get<long>(),
                          j["capacity_range"].at(1).get<long>()};
    }
    p.slots = j.value("slots", p.slots);
    p.seed = j.value("seed", p.seed);
  } catch (const json::exception& e) {
    throw Error(std::string("bad profile JSON: ") + e.what());
  }
  return p;
}

std::string profile_to_json_text(const CorpusProfile& p) {
  json j{{"job_count", p.job_count},
         {"type_count_range", {p.type_count_range.first, p.type_count_range.second}},
         {"demand_mean", p.demand_mean},
         {"demand_dispersion", p.demand_dispersion},
         {"capacity_range", {p.capacity_range.first, p.capacity_range.second}},
         {"slots", p.slots},
         {"seed", p.seed}};
  return j.dump(2) + "\n";
}

CorpusProfile load_profile(const std::filesystem::path& file) {
  return profile_from_json_text(read_file(file));
}

static std::string job_name(long index, long count) {
  int width = count >= 1000 ? 4 : 3;
  char buf[32];
  std::snprintf(buf, sizeof buf, "job_%0*ld", width, index + 1);
  return buf;
}

void write_corpus(const CorpusProfile& profile, const std::filesystem::path& dir,
                  long step_seconds, bool with_logs) {
  if (profile.job_count < 1) throw Error("profile job_count must be >= 1");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "'");

  json ids = json::array();
  for (long i = 0; i < profile.job_count; ++i) {
    const std::string id = job_name(i, profile.job_count);
    ids.push_back(id);
    Rng rng(substream_seed(profile.seed, static_cast<std::uint64_t>(i)));
    Instance inst = generate_instance(profile, rng);
    save_instance(inst, dir / (id + ".json"));
    if (!with_logs) continue;

    // The operator order for the baseline is just a random full sequence.
    InjectionSequence human = uniform_sequence(inst, rng);
    BeltAssignment b = decode(inst, human);
    std::vector<std::pair<long, long>> idle;
    if (rng.below(10) == 0) {
      // Occasional end-of-shift halt so ingestion has something to subtract.
      idle.push_back({static_cast<long>(b.steps().size()) - 1,
                      600 + static_cast<long>(rng.below(3001))});
    }
    TimestampLog log = synthesize_log(inst, b, step_seconds, idle, rng);
    log.job_id = id;
    save_log(log, dir / (id + ".csv"));
  }

  json manifest{{"jobs", ids}, {"profile", json::parse(profile_to_json_text(profile))}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

std::vector<CorpusJob> load_corpus(const std::filesystem::path& dir) {
  const std::filesystem::path manifest_path = dir / "manifest.json";
  if (!std::filesystem::exists(manifest_path)) {
    throw IoError("no manifest.json in '" + dir.string() + "'");
  }
  json manifest = parse(read_file(manifest_path), "manifest");
  if (!manifest.is_object() || !manifest.contains("jobs") || !manifest["jobs"].is_array()) {
    throw CorpusError("manifest.json needs a 'jobs' array");
  }
  std::vector<CorpusJob> jobs;
  for (const json& idj : manifest["jobs"]) {
    if (!idj.is_string()) throw CorpusError("manifest job ids must be strings");
    const std::string id = idj.get<std::string>();
    const std::filesystem::path inst_path = dir / (id + ".json");
    if (!std::filesystem::exists(inst_path)) {
      throw CorpusError("job '" + id + "' listed in manifest but '" + inst_path.string() +
                        "' is missing");
    }
    CorpusJob job{id, load_instance(inst_path), std::nullopt};
    const std::filesystem::path log_path = dir / (id + ".csv");
    if (std::filesystem::exists(log_path)) job.log = load_log(log_path);
    jobs.push_back(std::move(job));
  }
  return jobs;
}

namespace {

json stats_to_json(const std::string& name, const StrategyStats& s) {
  json j{{"name", name}, {"mean", s.mean}, {"min", s.min}, {"stddev", s.stddev}, {"gap", s.gap}};
  j["saved_steps"] = s.saved_steps ? json(*s.saved_steps) : json(nullptr);
  return j;
}

json cumulated_to_json(const std::string& name, const StrategyCumulated& c) {
  json j{{"name", name},
         {"total_mean", c.total_mean},
         {"total_mean_human_jobs", c.total_mean_human_jobs},
         {"ratio_lower_bound", c.ratio_lower_bound}};
  j["ratio_human"] = c.ratio_human ? json(*c.ratio_human) : json(nullptr);
  return j;
}

}  // namespace

std::string report_to_json_text(const BenchReport& r) {
  json config{{"strategies", r.strategy_names},
              {"repeats", r.repeats},
              {"seed", r.seed},
              {"search_steps", r.search_steps},
              {"search_swaps", r.search_swaps},
              {"idle_threshold_s", r.idle_threshold_s}};
  config["budget_sequences"] = r.budget_sequences ? json(*r.budget_sequences) : json(nullptr);
  config["budget_wall_ms"] = r.budget_wall_ms ? json(*r.budget_wall_ms) : json(nullptr);

  json jobs = json::array();
  for (const JobRecord& rec : r.jobs) {
    json strategies = json::array();
    for (std::size_t s = 0; s < rec.per_strategy.size(); ++s) {
      strategies.push_back(stats_to_json(r.strategy_names[s], rec.per_strategy[s]));
    }
    json j{{"job_id", rec.job_id},
           {"lower_bound", rec.lower_bound},
           {"worst_case_bound", rec.worst_case_bound},
           {"strategies", strategies}};
    j["human_makespan"] = rec.human_makespan ? json(*rec.human_makespan) : json(nullptr);
    jobs.push_back(j);
  }

  json cumulated{{"lower_bound", r.cumulated_lower_bound},
                 {"lower_bound_human_jobs", r.cumulated_lower_bound_human_jobs}};
  cumulated["human"] = r.cumulated_human ? json(*r.cumulated_human) : json(nullptr);
  cumulated["human_ratio_lower_bound"] =
      r.human_ratio_lower_bound ? json(*r.human_ratio_lower_bound) : json(nullptr);
  json cum_strats = json::array();
  for (std::size_t s = 0; s < r.cumulated.size(); ++s) {
    cum_strats.push_back(cumulated_to_json(r.strategy_names[s], r.cumulated[s]));
  }
  cumulated["strategies"] = cum_strats;

  json j{{"config", config}, {"jobs", jobs}, {"cumulated", cumulated}};
  return j.dump(2) + "\n";
}

BenchReport report_from_json_text(const std::string& text) {
  json j = parse(text, "report");
  BenchReport r;
  try {
    const json& config = j.at("config");
    r.strategy_names = config.at("strategies").get<std::vector<std::string>>();
    r.repeats = config.at("repeats").get<long>();
    r.seed = config.at("seed").get<std::uint64_t>();
    if (!config.at("budget_sequences").is_null()) r.budget_sequences = config["budget_sequences"].get<long>();
    if (!config.at("budget_wall_ms").is_null()) r.budget_wall_ms = config["budget_wall_ms"].get<long>();
    r.search_steps = config.at("search_steps").get<long>();
    r.search_swaps = config.at("search_swaps").get<long>();
    r.idle_threshold_s = config.at("idle_threshold_s").get<long>();

    for (const json& jj : j.at("jobs")) {
      JobRecord rec;
      rec.job_id = jj.at("job_id").get<std::string>();
      rec.lower_bound = jj.at("lower_bound").get<long>();
      rec.worst_case_bound = jj.at("worst_case_bound").get<long>();
      if (!jj.at("human_makespan").is_null()) rec.human_makespan = jj["human_makespan"].get<long>();
      for (const json& sj : jj.at("strategies")) {
        StrategyStats s;
        s.mean = sj.at("mean").get<double>();
        s.min = sj.at("min").get<long>();
        s.stddev = sj.at("stddev").get<double>();
        s.gap = sj.at("gap").get<double>();
        if (!sj.at("saved_steps").is_null()) s.saved_steps = sj["saved_steps"].get<double>();
        rec.per_strategy.push_back(s);
      }
      r.jobs.push_back(std::move(rec));
    }

    const json& cum = j.at("cumulated");
    r.cumulated_lower_bound = cum.at("lower_bound").get<long>();
    r.cumulated_lower_bound_human_jobs = cum.at("lower_bound_human_jobs").get<long>();
    if (!cum.at("human").is_null()) r.cumulated_human = cum["human"].get<long>();
    if (!cum.at("human_ratio_lower_bound").is_null()) {
      r.human_ratio_lower_bound = cum["human_ratio_lower_bound"].get<double>();
    }
    for (const json& cj : cum.at("strategies")) {
      StrategyCumulated c;
      c.total_mean = cj.at("total_mean").get<double>();
      c.total_mean_human_jobs = cj.at("total_mean_human_jobs").get<double>();
      c.ratio_lower_bound = cj.at("ratio_lower_bound").get<double>();
      if (!cj.at("ratio_human").is_null()) c.ratio_human = cj["ratio_human"].get<double>();
      r.cumulated.push_back(c);
    }
  } catch (const json::exception& e) {
    throw Error(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

void save_report_json(const BenchReport& report, const std::filesystem::path& file) {
  write_file(file, report_to_json_text(report));
}

BenchReport load_report_json(const std::filesystem::path& file) {
  return report_from_json_text(read_file(file));
}

void save_report_csv(const BenchReport& report, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "job_id,lower_bound,worst_case_bound,human_makespan";
  for (const std::string& name : report.strategy_names) {
    out << "," << name << "_mean," << name << "_min," << name << "_stddev," << name << "_saved,"
        << name << "_gap";
  }
  out << "\n";
  for (const JobRecord& rec : report.jobs) {
    out << rec.job_id << "," << rec.lower_bound << "," << rec.worst_case_bound << ",";
    if (rec.human_makespan) out << *rec.human_makespan;
    for (const StrategyStats& s : rec.per_strategy) {
      out << "," << fmt_double(s.mean) << "," << s.min << "," << fmt_double(s.stddev) << ",";
      if (s.saved_steps) out << fmt_double(*s.saved_steps);
      out << "," << fmt_double(s.gap);
    }
    out << "\n";
  }
  write_file(file, out.str());
}

void save_histogram_csv(const std::vector<std::pair<long, long>>& bins,
                        const std::filesystem::path& file) {
  std::ostringstream out;
  out << "bin_start,frequency\n";
  for (const auto& [start, freq] : bins) out << start << "," << freq << "\n";
  write_file(file, out.str());
}

void save_fit_csv(const LinearFit& fit, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "# slope=" << fmt_double(fit.slope) << "\n";
  out << "# intercept=" << fmt_double(fit.intercept) << "\n";
  out << "x,y\n";
  for (const auto& [x, y] : fit.points) out << fmt_double(x) << "," << fmt_double(y) << "\n";
  write_file(file, out.str());
}

void save_load_profile_csv(const LoadProfile& loads, const std::filesystem::path& file) {
  std::ostringstream out;
  out << "round,finished\n";
  for (std::size_t i = 0; i < loads.size(); ++i) out << i << "," << loads[i] << "\n";
  write_file(file, out.str());
}

}  // namespace belt::io
