// Command-line front end: analyze, witness, verify and batch.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpure/fpure.hpp"

namespace fs = std::filesystem;
using namespace fpure;

namespace {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kParse = 2,
    kInvalidInput = 3,
    kResource = 4,
    kNotMPrimary = 5,
};

struct Options {
    bool json = false;
    std::int64_t max_q = 0;
    std::size_t max_cols = 20000;
};

struct Loaded {
    ProblemFile file;
    CompleteIntersection ci;
};

Limits limits_for(const Options& opts, const ProblemFile& pf) {
    Limits limits;
    limits.max_q = opts.max_q > 0 ? opts.max_q : pf.max_q.value_or(0);
    limits.max_cols = opts.max_cols;
    return limits;
}

Loaded load(const fs::path& path) {
    auto pf = load_problem(path);
    auto ci = to_complete_intersection(pf);
    return {std::move(pf), std::move(ci)};
}

std::string ideal_to_string(const Ideal& ideal) {
    std::string s = "(";
    bool first = true;
    for (const auto& g : ideal.generators()) {
        if (!first) s += ", ";
        s += to_string(g);
        first = false;
    }
    return s + ")";
}

std::string ring_to_string(const Ring& ring) {
    std::string s = "F_" + std::to_string(ring.characteristic()) + "[";
    for (std::size_t i = 0; i < ring.nvars(); ++i) s += (i ? ", " : "") + ring.names()[i];
    return s + "]";
}

template <class T>
std::string opt(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string("n/a");
}

struct Failure {
    int code;
    std::string message;
};

// Maps library exceptions to exit codes.
Failure describe(const std::exception_ptr& error) {
    try {
        std::rethrow_exception(error);
    } catch (const ParseError& e) {
        return {kParse, std::string("parse error: ") + e.what()};
    } catch (const NotRegularSequence& e) {
        return {kInvalidInput, std::string("invalid input: ") + e.what()};
    } catch (const RingMismatch& e) {
        return {kInvalidInput, std::string("invalid input: ") + e.what()};
    } catch (const DomainError& e) {
        return {kInvalidInput, std::string("invalid input: ") + e.what()};
    } catch (const ResourceLimit& e) {
        return {kResource, std::string("resource cap exceeded: ") + e.what()};
    } catch (const OverflowError& e) {
        return {kResource, std::string("resource cap exceeded: ") + e.what()};
    } catch (const std::exception& e) {
        return {kInternal, std::string("error: ") + e.what()};
    }
}

template <class Body>
int guarded(Body&& body) {
    try {
        return body();
    } catch (...) {
        auto failure = describe(std::current_exception());
        std::cerr << failure.message << "\n";
        return failure.code;
    }
}

int cmd_analyze(const Options& opts, const fs::path& path) {
    return guarded([&] {
        auto [pf, ci] = load(path);
        auto tau = compute_tau(ci);
        auto report = analyze(ci, tau);
        if (opts.json) {
            std::cout << json(report).dump(2) << "\n";
            return kOk;
        }
        std::cout << "ring:                 " << ring_to_string(*ci.ring()) << "\n"
                  << "forms:                " << ci.codimension() << " (d = " << ci.total_degree() << ")\n"
                  << "tau:                  " << ideal_to_string(tau.tau) << "\n"
                  << "tau class:            " << to_string(report.tau_class) << "\n"
                  << "F-pure at m:          " << (report.fpure_at_m ? "yes" : "no") << "\n"
                  << "isolated singularity: " << (report.isolated_singularity ? "yes" : "no") << "\n"
                  << "a(R):                 " << report.a_invariant << "\n"
                  << "reg(S/tau):           " << opt(report.reg_s_mod_tau) << "\n"
                  << "ell:                  " << opt(report.ell) << "\n"
                  << "injectivity bound:    " << opt(report.thmA_bound) << "\n"
                  << "degree bound:         " << report.cor_bound << "\n"
                  << "prime threshold:      " << report.thmB_threshold << "\n";
        return kOk;
    });
}

int cmd_witness(const Options& opts, const fs::path& path) {
    return guarded([&] {
        auto [pf, ci] = load(path);
        auto tau = compute_tau(ci);
        auto cls = classify(tau);
        if (cls != TauClass::isolated_non_f_pure_point) {
            if (cls == TauClass::everywhere_f_pure) {
                std::cerr << "no witness: everywhere F-pure (tau = S)\n";
            } else {
                std::cerr << "no witness: tau is not m-primary (" << to_string(cls) << ")\n"
                          << "tau = " << ideal_to_string(tau.tau) << "\n";
            }
            return kNotMPrimary;
        }
        auto witness = kernel_witness(ci, tau, limits_for(opts, pf));
        auto j = class_to_json(witness);
        j["frobenius_image_is_zero"] = is_zero(frobenius_action(witness));
        if (opts.json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "witness: [" << to_string(witness.numerator()) << " / x^" << witness.q() << "]\n"
                      << "degree:  " << witness.degree() << "\n"
                      << "F(witness) = 0: " << (j["frobenius_image_is_zero"].get<bool>() ? "yes" : "no") << "\n";
        }
        return kOk;
    });
}

int cmd_verify(const Options& opts, const fs::path& path, std::optional<std::int64_t> from,
               std::optional<std::int64_t> to) {
    return guarded([&] {
        auto [pf, ci] = load(path);
        if ((!from || !to) && !pf.window) throw ParseError("verify needs --from/--to or a window in the file", 0, 0);
        std::int64_t lo = from ? *from : pf.window->first;
        std::int64_t hi = to ? *to : pf.window->second;
        if (hi - lo + 1 > 20) throw ParseError("degree window is limited to 20 degrees", 0, 0);

        auto limits = limits_for(opts, pf);
        auto tau = compute_tau(ci);
        auto report = analyze(ci, tau);
        std::vector<InjectivityResult> rows;
        std::optional<std::string> cap_error;
        for (std::int64_t t = lo; t <= hi; ++t) {
            try {
                rows.push_back(verify_injectivity(ci, t, limits));
            } catch (const ResourceLimit& e) {
                cap_error = e.what();
                break;
            } catch (const OverflowError& e) {
                cap_error = e.what();
                break;
            }
        }

        bool consistent = true;
        std::string thm_a = "not applicable";
        if (report.thmA_bound) {
            bool ok = true;
            for (const auto& r : rows) {
                if (r.degree < *report.thmA_bound && !r.injective()) ok = false;
                if (r.degree == *report.thmA_bound && r.dim_kernel == 0) ok = false;
            }
            thm_a = std::string(ok ? "PASS" : "FAIL") + " (injective below " + std::to_string(*report.thmA_bound) +
                    ", kernel at " + std::to_string(*report.thmA_bound) + ")";
            consistent = consistent && ok;
        } else if (report.fpure_at_m) {
            bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.injective(); });
            thm_a = std::string(ok ? "PASS" : "FAIL") + " (F-pure: injective in every degree)";
            consistent = consistent && ok;
        }
        std::string thm_b = "not applicable";
        if (report.isolated_singularity && ci.characteristic() >= report.thmB_threshold) {
            bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.degree >= 0 || r.injective(); });
            thm_b = std::string(ok ? "PASS" : "FAIL") + " (isolated singularity, p >= " +
                    std::to_string(report.thmB_threshold) + ": injective in negative degrees)";
            consistent = consistent && ok;
        }

        if (opts.json) {
            json j;
            j["rows"] = json::array();
            for (const auto& r : rows) j["rows"].push_back(injectivity_to_json(r));
            j["injectivity_bound"] = thm_a;
            j["prime_threshold"] = thm_b;
            j["consistent"] = consistent;
            if (cap_error) j["error"] = *cap_error;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "degree  dim  kernel_dim\n";
            for (const auto& r : rows) {
                std::ostringstream line;
                line.width(6);
                line << r.degree;
                line << "  ";
                line.width(3);
                line << r.dim_source << "  " << r.dim_kernel;
                std::cout << line.str() << "\n";
            }
            std::cout << "injectivity bound: " << thm_a << "\n"
                      << "prime threshold:   " << thm_b << "\n"
                      << "consistency:       " << (consistent ? "PASS" : "FAIL") << "\n";
        }
        if (cap_error) {
            std::cerr << "resource cap exceeded: " << *cap_error << "\n";
            return kResource;
        }
        return consistent ? kOk : kInternal;
    });
}

int cmd_batch(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        std::cerr << "error: " << dir.string() << " is not a directory\n";
        return kParse;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    // Files are analyzed concurrently; lines are emitted in filename order.
    std::vector<std::future<json>> tasks;
    for (const auto& f : files) {
        tasks.push_back(std::async(std::launch::async, [f] {
            json line{{"file", f.filename().string()}};
            try {
                auto loaded = load(f);
                line["report"] = json(analyze(loaded.ci));
            } catch (...) {
                auto failure = describe(std::current_exception());
                line["error"] = json{{"code", failure.code}, {"message", failure.message}};
            }
            return line;
        }));
    }
    std::size_t failures = 0;
    for (auto& task : tasks) {
        auto line = task.get();
        if (line.contains("error")) ++failures;
        std::cout << line.dump() << "\n";
    }
    return (!files.empty() && failures == files.size()) ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius invariants of graded complete intersections over F_p"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--json", opts.json, "Emit JSON instead of text");
    app.add_option("--max-q", opts.max_q, "Largest q tried in stabilization searches (default p^6)");
    app.add_option("--max-cols", opts.max_cols, "Widest coefficient matrix allowed")->capture_default_str();

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compute tau, F-purity verdicts and the degree bounds");
    analyze_cmd->add_option("file", path, "Problem file")->required();
    auto* witness_cmd = app.add_subcommand("witness", "Produce a Frobenius kernel element of least degree");
    witness_cmd->add_option("file", path, "Problem file")->required();
    auto* verify_cmd = app.add_subcommand("verify", "Check injectivity of Frobenius degree by degree");
    verify_cmd->add_option("file", path, "Problem file")->required();
    std::optional<std::int64_t> from;
    std::optional<std::int64_t> to;
    verify_cmd->add_option("--from", from, "First degree");
    verify_cmd->add_option("--to", to, "Last degree");
    auto* batch_cmd = app.add_subcommand("batch", "Analyze every problem file in a directory (JSON lines)");
    batch_cmd->add_option("dir", path, "Directory of problem files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (*analyze_cmd) return cmd_analyze(opts, path);
    if (*witness_cmd) return cmd_witness(opts, path);
    if (*verify_cmd) return cmd_verify(opts, path, from, to);
    if (*batch_cmd) return cmd_batch(path);
    return kParse;
}
