#pragma once

#include "agrarian/error.hpp"
#include "agrarian/fibration.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace agrarian::jobs {

using Json = nlohmann::json;
using Report = nlohmann::ordered_json;

// A malformed string inside a job, located by its JSON path.
class FieldParseError : public ParseError {
public:
    FieldParseError(std::string path, const ParseError& inner)
        : ParseError(path + ": " + strip_position(inner.what()), inner.position()), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    static std::string strip_position(std::string what) {
        auto at = what.rfind(" (at offset ");
        return at == std::string::npos ? what : what.substr(0, at);
    }
    std::string path_;
};

using StringMatrix = std::vector<std::vector<std::string>>;

struct RepresentationSpec {
    std::size_t dim = 1;
    std::vector<StringMatrix> matrices;  // one per generator, entries in Q(i)
    std::optional<std::vector<StringMatrix>> inverses;
};

struct ComplexSpec {
    std::vector<std::size_t> ranks;
    std::vector<StringMatrix> boundaries;  // group ring elements over the generator names
};

struct FiberSpec {
    std::optional<long> fiber_rank;
    std::optional<long> fiber_euler;
};

struct JobOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> polytope_cap;
    std::string method = "auto";
    std::optional<std::string> deleted_row;  // generator name
    bool cross_check = true;
    std::string clause = "auto";  // fibration evaluator
};

enum class Task { Norm, Betti, Torsion, Polytope, Inequality, Fibration, Selftest };

std::string task_name(Task t);

struct Job {
    Task task = Task::Selftest;
    std::optional<std::string> group;
    std::optional<RepresentationSpec> representation;
    std::optional<std::vector<long>> character;
    std::optional<FiberSpec> fibered;
    std::optional<FibrationInput> fibration;
    std::optional<ComplexSpec> complex;
    JobOptions options;
};

// Schema check and conversion. Throws ValidationError naming the offending path.
Job parse_job(const Json& j);
Json to_json(const Job& job);

struct Settings {
    std::uint64_t seed = 1;
    bool timing = false;
};

struct Outcome {
    int exit_code = 0;
    Report report;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUndefined = 3;
inline constexpr int kExitCrossCheck = 4;

// Runs one job; never throws. `label` identifies the job in the report.
Outcome run_job(const Json& job, const std::string& label, const Settings& settings);

// A job file holds one job object or an array of them.
std::vector<Json> read_job_file(const std::filesystem::path& path);

// Runs every job with up to `threads` workers; outcomes keep input order.
std::vector<Outcome> run_batch(const std::vector<std::pair<std::string, Json>>& jobs, const Settings& settings,
                               std::size_t threads);

}  // namespace agrarian::jobs
