#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Run run(const std::string& args) {
    static int counter = 0;
    auto dir = fs::temp_directory_path() / ("fpure_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto out = dir / ("out" + std::to_string(counter));
    auto err = dir / ("err" + std::to_string(counter++));
    std::string cmd = std::string("\"") + FPURE_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string problem(const std::string& name) { return std::string("\"") + FPURE_PROBLEMS + "/" + name + "\""; }
std::string data(const std::string& name) { return std::string("\"") + FPURE_TEST_DATA + "/" + name + "\""; }

}  // namespace

TEST(Cli, AnalyzeQuartic) {
    auto r = run("--json analyze " + problem("quartic_p3.txt"));
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["fpure_at_m"], false);
    EXPECT_EQ(j["tau_class"], "isolated_non_f_pure_point");
    EXPECT_EQ(j["ell"], 0);
    EXPECT_EQ(j["reg_s_mod_tau"], 0);
    EXPECT_EQ(j["a_invariant"], 1);
    EXPECT_EQ(j["thmA_bound"], 1);
    EXPECT_EQ(j["cor_bound"], -8);
    EXPECT_EQ(j["thmB_threshold"], 6);
    EXPECT_EQ(j["isolated_singularity"], false);

    auto text = run("analyze " + problem("quartic_p3.txt"));
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("injectivity bound:    1"), std::string::npos) << text.out;
}

TEST(Cli, AnalyzeNode) {
    auto r = run("analyze --json " + problem("node_p5.txt"));
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["fpure_at_m"], true);
    EXPECT_EQ(j["tau_class"], "everywhere_f_pure");
    EXPECT_TRUE(j["thmA_bound"].is_null());
}

TEST(Cli, ParseErrorsExitTwo) {
    auto r = run("analyze " + data("malformed/bad_poly.txt"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3, column 16"), std::string::npos) << r.err;
    EXPECT_EQ(run("analyze /nonexistent/file.txt").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, InvalidSequenceExitsThree) {
    auto r = run("analyze " + data("malformed/not_regular.txt"));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("invalid input"), std::string::npos) << r.err;
}

TEST(Cli, Witness) {
    auto r = run("--json witness " + problem("quartic_p3.txt"));
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["degree"], 1);
    EXPECT_EQ(j["q"], 3);
    EXPECT_EQ(j["numerator"], "x^2*y^2*z^2");
    EXPECT_EQ(j["frobenius_image_is_zero"], true);

    auto unit = run("witness " + problem("node_p5.txt"));
    EXPECT_EQ(unit.code, 5);
    EXPECT_NE(unit.err.find("everywhere F-pure"), std::string::npos) << unit.err;

    auto lines = run("witness " + problem("double_lines_p3.txt"));
    EXPECT_EQ(lines.code, 5);
    EXPECT_NE(lines.err.find("x*y"), std::string::npos) << lines.err;
    EXPECT_NE(lines.err.find("non_f_pure_locus_positive_dimensional"), std::string::npos) << lines.err;
}

TEST(Cli, WitnessResourceCap) {
    // M_q of tau stabilizes only at q = 4 here.
    auto file = fs::temp_directory_path() / "fpure_diag7.txt";
    std::ofstream(file) << "p = 2\nvars = x, y\ngens = x^7 + y^7\n";
    EXPECT_EQ(run("--max-q 2 witness \"" + file.string() + "\"").code, 4);
    EXPECT_EQ(run("--max-q 4 witness \"" + file.string() + "\"").code, 0);
}

TEST(Cli, VerifyQuartic) {
    auto r = run("verify " + problem("quartic_p3.txt") + " --from -3 --to 2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("consistency:       PASS"), std::string::npos) << r.out;
    auto j = json::parse(run("--json verify " + problem("quartic_p3.txt")).out);
    ASSERT_EQ(j["rows"].size(), 6U);
    for (const auto& row : j["rows"]) {
        EXPECT_EQ(row["dim_kernel"].get<int>(), row["degree"] == 1 ? 1 : 0) << row.dump();
    }
    EXPECT_EQ(j["consistent"], true);
}

TEST(Cli, VerifyFermatAboveThreshold) {
    auto j = json::parse(run("--json verify " + problem("fermat_cubic_p5.txt")).out);
    ASSERT_EQ(j["rows"].size(), 3U);
    for (const auto& row : j["rows"]) EXPECT_EQ(row["dim_kernel"], 0);
    EXPECT_NE(j["prime_threshold"].get<std::string>().find("PASS"), std::string::npos);
}

TEST(Cli, VerifyWindows) {
    auto empty = run("verify " + problem("quartic_p3.txt") + " --from 3 --to 2");
    EXPECT_EQ(empty.code, 0) << empty.err;
    EXPECT_EQ(run("verify " + data("malformed/big_window.txt")).code, 2);
    EXPECT_EQ(run("verify " + problem("node_p5.txt")).code, 2);
    EXPECT_EQ(run("verify " + problem("node_p5.txt") + " --from -2").code, 2);
    auto capped = run("--max-cols 5 verify " + problem("quartic_p3.txt") + " --from -3 --to 2");
    EXPECT_EQ(capped.code, 4);
    EXPECT_NE(capped.out.find("degree"), std::string::npos);
}

TEST(Cli, Batch) {
    auto r = run("batch " + std::string("\"") + FPURE_PROBLEMS + "\"");
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::vector<json> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
    ASSERT_EQ(lines.size(), 5U);
    std::vector<std::string> names;
    for (const auto& l : lines) {
        names.push_back(l["file"]);
        EXPECT_TRUE(l.contains("report")) << l.dump();
    }
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    // Repeated runs agree line for line.
    EXPECT_EQ(run("batch " + std::string("\"") + FPURE_PROBLEMS + "\"").out, r.out);
}

TEST(Cli, BatchEdgeCases) {
    auto empty_dir = fs::temp_directory_path() / "fpure_empty_batch";
    fs::create_directories(empty_dir);
    auto e = run("batch \"" + empty_dir.string() + "\"");
    EXPECT_EQ(e.code, 0);
    EXPECT_TRUE(e.out.empty());

    auto mixed = fs::temp_directory_path() / "fpure_mixed_batch";
    fs::create_directories(mixed);
    fs::copy_file(fs::path(FPURE_PROBLEMS) / "quartic_p3.txt", mixed / "a.txt", fs::copy_options::overwrite_existing);
    fs::copy_file(fs::path(FPURE_TEST_DATA) / "malformed/bad_poly.txt", mixed / "b.txt",
                  fs::copy_options::overwrite_existing);
    auto m = run("batch \"" + mixed.string() + "\"");
    EXPECT_EQ(m.code, 0);
    std::istringstream in(m.out);
    std::string first, second;
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_TRUE(json::parse(first).contains("report"));
    auto err = json::parse(second);
    EXPECT_EQ(err["file"], "b.txt");
    EXPECT_EQ(err["error"]["code"], 2);

    auto bad_only = fs::temp_directory_path() / "fpure_bad_batch";
    fs::create_directories(bad_only);
    fs::copy_file(fs::path(FPURE_TEST_DATA) / "malformed/bad_poly.txt", bad_only / "b.txt",
                  fs::copy_options::overwrite_existing);
    EXPECT_EQ(run("batch \"" + bad_only.string() + "\"").code, 1);
}
