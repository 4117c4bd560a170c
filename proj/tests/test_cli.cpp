#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "mubgeo/json_io.hpp"
#include "mubgeo/mub.hpp"
#include "mubgeo/phasespace.hpp"
#include "mubgeo/rng.hpp"

using namespace mubgeo;

namespace {

// Exit code of the tool run through the shell; stdout/stderr are dropped
// unless the command itself redirects them.
int run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + MUBGEO_CLI_PATH + "\" " + args +
                      " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int run_cli_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " \"" + MUBGEO_CLI_PATH + "\" " + args +
                      " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("geometry subcommand exit codes") {
    CHECK(run_cli("geometry dapg 3 --check") == 0);
    CHECK(run_cli("geometry apg 4") == 2);
    CHECK(run_cli("geometry torus 5") == 2);
    CHECK(run_cli("") == 2);
}

TEST_CASE("geometry output parses back into a valid structure") {
    std::string path = "cli_tmp_fpp.json";
    CHECK(run_cli("geometry fpp 3 --check --out " + path) == 0);
    Incidence g = incidence_from_json(parse_json_text(read_text_file(path)));
    CHECK(g.kind == GeometryKind::FPP);
    CHECK(g.num_points == 13);
    CHECK(g.num_lines == 13);
    CHECK(check_axioms(g).all_pass());
    std::remove(path.c_str());
}

TEST_CASE("mub and lineops checks pass on valid dimensions") {
    CHECK(run_cli("mub 5 --check") == 0);
    CHECK(run_cli("lineops 3 --check") == 0);
    CHECK(run_cli("lineops 3 --check --family 2,1") == 0);
    CHECK(run_cli("lineops 3 --family 0,1") == 2);
    CHECK(run_cli("lineops 3 --family nonsense") == 2);
    CHECK(run_cli("mub 9 --check") == 2);
}

TEST_CASE("wigner pipeline against the library") {
    SeededRng rng(2024);
    DensityMatrix rho = DensityMatrix::pure(rng.random_state(3));
    json dj{{"d", 3}, {"matrix", mat_to_json(rho.matrix())}};
    write_text_file("cli_tmp_rho.json", dj.dump() + "\n");

    CHECK(run_cli("wigner cli_tmp_rho.json --out cli_tmp_w.csv") == 0);
    PhaseTable got = wigner_from_csv(read_text_file("cli_tmp_w.csv"));
    PhaseTable want = wigner(rho);
    REQUIRE(got.d == want.d);
    for (size_t i = 0; i < want.values.size(); ++i) CHECK(got.values[i] == want.values[i]);

    CHECK(run_cli("wigner cli_tmp_rho.json --radon --out cli_tmp_w2.csv") == 0);
    RadonTable r = radon_from_csv(read_text_file("cli_tmp_w2.csv.radon.csv"));
    RadonTable rwant = radon(want);
    for (size_t i = 0; i < rwant.values.size(); ++i) CHECK(r.values[i] == rwant.values[i]);

    CHECK(run_cli("radon cli_tmp_rho.json --out cli_tmp_r.csv") == 0);
    RadonTable r2 = radon_from_csv(read_text_file("cli_tmp_r.csv"));
    for (size_t i = 0; i < rwant.values.size(); ++i) CHECK(r2.values[i] == rwant.values[i]);

    for (const char* p : {"cli_tmp_rho.json", "cli_tmp_w.csv", "cli_tmp_w2.csv",
                          "cli_tmp_w2.csv.radon.csv", "cli_tmp_r.csv"})
        std::remove(p);
}

TEST_CASE("wigner rejects malformed or unphysical input") {
    write_text_file("cli_tmp_bad.json", "{not json\n");
    CHECK(run_cli("wigner cli_tmp_bad.json") == 3);

    json dj{{"d", 3}, {"matrix", mat_to_json(Mat::identity(3))}};  // trace 3
    write_text_file("cli_tmp_unphys.json", dj.dump() + "\n");
    CHECK(run_cli("wigner cli_tmp_unphys.json") == 3);
    CHECK(run_cli("wigner cli_tmp_missing.json") == 3);

    std::remove("cli_tmp_bad.json");
    std::remove("cli_tmp_unphys.json");
}

TEST_CASE("meanking requires a seed and honors the environment fallback") {
    CHECK(run_cli_env("env -u MUBGEO_SEED", "meanking mkp 3 --rounds 10") == 2);
    CHECK(run_cli_env("env MUBGEO_SEED=9", "meanking mkp 3 --rounds 10") == 0);
    CHECK(run_cli_env("env MUBGEO_SEED=nope", "meanking mkp 3 --rounds 10") == 2);
    CHECK(run_cli("meanking mkp 3 --rounds 0 --seed 1") == 2);
    CHECK(run_cli("meanking other 3 --seed 1") == 2);
    CHECK(run_cli("meanking tmk 4 --seed 1") == 2);
}

TEST_CASE("meanking logs are reproducible and match the library") {
    CHECK(run_cli("meanking mkp 5 --rounds 40 --seed 123 --out cli_tmp_a.jsonl") == 0);
    CHECK(run_cli("meanking mkp 5 --rounds 40 --seed 123 --out cli_tmp_b.jsonl") == 0);
    std::string a = read_text_file("cli_tmp_a.jsonl");
    std::string b = read_text_file("cli_tmp_b.jsonl");
    CHECK(a == b);

    std::vector<Transcript> ts = run_batch(Protocol::MKP, 5, 40, 123);
    CHECK(a == batch_to_jsonl(ts, summarize(ts)));

    CHECK(run_cli("meanking tmk 3 --rounds 60 --seed 5 --out cli_tmp_t.jsonl") == 0);
    auto [tts, sum] = batch_from_jsonl(read_text_file("cli_tmp_t.jsonl"));
    CHECK(sum.rounds == 60);
    CHECK(static_cast<long long>(tts.size()) == 60);

    for (const char* p : {"cli_tmp_a.jsonl", "cli_tmp_b.jsonl", "cli_tmp_t.jsonl"})
        std::remove(p);
}

TEST_CASE("selftest dimension validation") {
    CHECK(run_cli("selftest 3 --seed 11") == 0);
    CHECK(run_cli("selftest 6") == 2);
    CHECK(run_cli("selftest 29") == 2);
}
