#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "belt/data.hpp"
#include "belt/harness.hpp"
#include "belt/instance.hpp"
#include "belt/sequence.hpp"

namespace belt::io {

// Instance files: {"slots": N, "types": [{"id","demand","capacity"}, ...]}.
// Saving is canonical (two-space indent, sorted keys), so save(load(f))
// reproduces f byte for byte.
Instance load_instance(const std::filesystem::path& file);
void save_instance(const Instance& inst, const std::filesystem::path& file);
Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& inst);

// Sequence files: {"entries": ["A", "B", ...]}, ids resolved against inst.
InjectionSequence load_sequence(const Instance& inst, const std::filesystem::path& file);
void save_sequence(const Instance& inst, const InjectionSequence& seq,
                   const std::filesystem::path& file);
InjectionSequence sequence_from_json_text(const Instance& inst, const std::string& text);
std::string sequence_to_json_text(const Instance& inst, const InjectionSequence& seq);

// Log files: "# job_id=", "# start_s=", "# end_s=" comment lines, then a
// "time_s,mould_id,type" CSV header and one row per event.
TimestampLog load_log(const std::filesystem::path& file);
void save_log(const TimestampLog& log, const std::filesystem::path& file);

// Corpus directory: manifest.json {"jobs": [...], "profile": {...}} plus
// <job>.json and optional <job>.csv per job.
CorpusProfile profile_from_json_text(const std::string& text);
std::string profile_to_json_text(const CorpusProfile& profile);
CorpusProfile load_profile(const std::filesystem::path& file);

void write_corpus(const CorpusProfile& profile, const std::filesystem::path& dir,
                  long step_seconds = 25, bool with_logs = true);
std::vector<CorpusJob> load_corpus(const std::filesystem::path& dir);

// Bench reports, JSON (lossless: parsing gives back the same BenchReport) and
// a flat CSV view.
std::string report_to_json_text(const BenchReport& report);
BenchReport report_from_json_text(const std::string& text);
void save_report_json(const BenchReport& report, const std::filesystem::path& file);
BenchReport load_report_json(const std::filesystem::path& file);
void save_report_csv(const BenchReport& report, const std::filesystem::path& file);

void save_histogram_csv(const std::vector<std::pair<long, long>>& bins,
                        const std::filesystem::path& file);
void save_fit_csv(const LinearFit& fit, const std::filesystem::path& file);
void save_load_profile_csv(const LoadProfile& loads, const std::filesystem::path& file);

// Raw helpers with the same IoError behaviour as the loaders above.
std::string read_text(const std::filesystem::path& file);
void write_text(const std::filesystem::path& file, const std::string& text);

}  // namespace belt::io
