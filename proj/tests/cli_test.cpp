// Runs the hcs executable (path in argv[1]) and checks exit codes, output and cache files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

std::string exe;
int failures = 0;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + exe + "' " + args + " 2>&1";
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    const int status = ::pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect(bool ok, const std::string& what, const std::string& output = {}) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) {
        ++failures;
        if (!output.empty()) std::cout << output << "\n";
    }
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_test <path to hcs>\n";
        return 2;
    }
    exe = argv[1];

    auto r = run("tableaux --n 3");
    expect(r.code == 0 && contains(r.out, "(3)  m = 1") && contains(r.out, "(2,1)  m = 1"), "tableaux --n 3", r.out);

    r = run("tableaux --shape 4,3,1 --which column");
    expect(r.code == 0 && contains(r.out, " 1 2 4 7\n   3 5 8\n     6"), "column tableau of (4,3,1)", r.out);

    r = run("tableaux --shape 2,2");
    expect(r.code == 2 && contains(r.out, "strictly decreasing"), "non-strict shape is a usage error", r.out);

    r = run("verify --suite no-such-suite --n 3");
    expect(r.code == 2, "unknown suite is a usage error", r.out);

    r = run("verify --suite relations --n 6");
    expect(r.code == 2 && contains(r.out, "--force"), "desk bound needs --force", r.out);

    r = run("psi --shape 4,2 --which column");
    expect(r.code == 2, "psi above the desk bound needs --force", r.out);

    r = run("verify --suite dims --n 5");
    expect(r.code == 0 && contains(r.out, "PASS"), "dims at n = 5", r.out);

    r = run("--format json verify --suite relations --n 3");
    expect(r.code == 0 && contains(r.out, "\"suite\": \"relations\"") && contains(r.out, "\"seed\"") &&
               contains(r.out, "\"timings\""),
           "JSON report", r.out);

    r = run("verify --suite conjecture --n 3");
    expect(r.code == 0 && contains(r.out, "info") && contains(r.out, "symmetrizer-square"), "conjecture is informational",
           r.out);

    r = run("psi --shape 1");
    expect(r.code == 0 && contains(r.out, "terms 1") && contains(r.out, "coefficient (1)"), "psi of (1) is 1", r.out);

    const auto dir = std::filesystem::temp_directory_path() / ("hcs-cli-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const std::string env = "HCS_CACHE_DIR='" + dir.string() + "'";
    r = run("psi --shape 2,1 --which column", env);
    expect(r.code == 0 && contains(r.out, "leading term T_[3 2 1]") && contains(r.out, "coefficient (1)") &&
               contains(r.out, "stored to"),
           "psi (2,1) column, leading coefficient 1", r.out);
    const auto file = dir / "psi-n3-2-1-1-2-3.json";
    const std::string first = slurp(file);
    std::filesystem::remove(file);
    r = run("psi --shape 2,1 --which column", env);
    expect(r.code == 0 && !first.empty() && slurp(file) == first, "recomputed cache file is byte-identical", r.out);
    r = run("psi --shape 2,1 --which column", env);
    expect(r.code == 0 && contains(r.out, "loaded from"), "second run reads the cache", r.out);
    std::filesystem::remove_all(dir);

    std::cout << (failures ? "FAILED" : "all CLI checks passed") << "\n";
    return failures ? 1 : 0;
}
