#include "agrarian_tools/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace agrarian;

int main(int argc, char** argv) {
    CLI::App app{"Agrarian invariants of finitely presented groups, driven by JSON job files"};
    std::vector<std::string> files;
    std::string out_path = "-";
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    bool timing = false;
    app.add_option("--job", files, "Job file (object or array of objects); repeatable")->required();
    app.add_option("--out", out_path, "Output file, '-' for stdout");
    app.add_option("--seed", seed, "Seed for randomized rank bounds, unless a job sets its own");
    app.add_option("--jobs", threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "Add elapsed_ms to each report (reports are then not reproducible)");
    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<std::string, jobs::Json>> batch;
    std::vector<jobs::Outcome> file_errors;
    for (const auto& f : files) {
        try {
            auto js = jobs::read_job_file(f);
            for (std::size_t i = 0; i < js.size(); ++i) batch.emplace_back(f + "#" + std::to_string(i), std::move(js[i]));
        } catch (const ParseError& e) {
            jobs::Outcome o{jobs::kExitValidation, {}};
            o.report = {{"job", f}, {"status", "error"}, {"exit_code", jobs::kExitValidation},
                        {"error", {{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}}}};
            file_errors.push_back(std::move(o));
        } catch (const Error& e) {
            jobs::Outcome o{jobs::kExitValidation, {}};
            o.report = {{"job", f}, {"status", "error"}, {"exit_code", jobs::kExitValidation},
                        {"error", {{"kind", "validation"}, {"message", e.what()}}}};
            file_errors.push_back(std::move(o));
        }
    }

    auto outcomes = jobs::run_batch(batch, {seed, timing}, threads);

    std::ofstream file;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return jobs::kExitValidation;
        }
    }
    std::ostream& out = out_path == "-" ? std::cout : file;
    int code = jobs::kExitOk;
    for (const auto* group : {&file_errors, &outcomes})
        for (const auto& o : *group) {
            out << o.report.dump() << "\n";
            code = std::max(code, o.exit_code);
        }
    return code;
}
