#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ginv/cli.hpp"
#include "ginv/errors.hpp"
#include "ginv/invariants.hpp"
#include "ginv/json_io.hpp"

using namespace ginv;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &body)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST_CASE("group spec JSON round trip")
{
    const auto [h1, h2] = isospectral_pair(3);
    for (const GroupSpec &g : {h1, h2}) {
        const GroupSpec back = group_spec_from_json(group_spec_to_json(g));
        CHECK(back.factors() == g.factors());
        CHECK(back.weyl_order() == g.weyl_order());
        CHECK(back.complex_weights() == g.complex_weights());
        CHECK(molien_series(back, 6) == molien_series(g, 6));
    }
}

TEST_CASE("group spec from ambient weights and multiplicities")
{
    const Json j = Json::parse(R"({"factors":[{"family":"U","rank":1}],
        "ambient_weights":[[1],[-1]], "multiplicity":[2,2]})");
    const GroupSpec g = group_spec_from_json(j);
    CHECK(g.ambient_real_dim() == 4);
    // U(1) on C^2 by scalars: invariants of degree 2 are the 4 Hermitian forms.
    CHECK(molien_series(g, 2)[2] == 4);
}

TEST_CASE("malformed group specs are rejected")
{
    CHECK_THROWS_AS(group_spec_from_json(Json::parse("{}")), InvalidSpec);
    CHECK_THROWS_AS(group_spec_from_json(Json::parse(R"({"factors":[{"family":"E","rank":8}]})")), InvalidSpec);
    CHECK_THROWS_AS(group_spec_from_json(Json::parse(R"({"factors":[{"family":"SO","rank":1}]})")), InvalidSpec);
    CHECK_THROWS_AS(
        group_spec_from_json(Json::parse(R"({"factors":[{"family":"U","rank":1}],"ambient_weights":[[1]]})")),
        InvalidSpec);
    CHECK_THROWS_AS(group_spec_from_json(Json::parse(
                        R"({"factors":[{"family":"U","rank":1}],"ambient_weights":[[1],[-1]],"multiplicity":[1]})")),
                    InvalidSpec);
    CHECK_THROWS_AS(group_spec_from_json(Json::parse(
                        R"({"factors":[{"family":"U","rank":1}],"ambient_weights":[[1],[-1]],"complex_weights":[[2]]})")),
                    InvalidSpec);
    CHECK_THROWS_AS(load_group_spec("/nonexistent/spec.json"), InvalidSpec);
}

TEST_CASE("cli compare reports a full match")
{
    const Run r = run({"compare", "--n", "3", "--degree", "12", "--format", "json"});
    CHECK(r.code == cli::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "full-match");
    CHECK(j["first_mismatch"].is_null());
}

TEST_CASE("cli compare against the hemisphere names the first mismatch")
{
    const Run r = run({"compare", "--against", "hemisphere"});
    CHECK(r.code == cli::kPass);
    const Json j = Json::parse(r.out);
    CHECK(j["verdict"] == "mismatch");
    CHECK(j["first_mismatch"]["eigenvalue"] == 12);
}

TEST_CASE("cli spectrum rows and custom spec")
{
    Run r = run({"spectrum", "--degree", "4"});
    CHECK(r.code == cli::kPass);
    Json j = Json::parse(r.out);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][2] == Json::parse(R"({"k":2,"lambda":24,"m":3})"));

    const auto path = temp_file("ginv_spec_test.json", R"({"factors":[{"family":"Sp","rank":1}],
        "ambient_weights":[[1],[-1]],"multiplicity":[2,2]})");
    r = run({"spectrum", "--spec", path.string(), "--degree", "4"});
    CHECK(r.code == cli::kPass);
    j = Json::parse(r.out);
    CHECK(j["group"] == "custom");
    CHECK(j["sphere_dim"] == 3);
    CHECK(j["rows"][2]["m"] == 0);
    std::filesystem::remove(path);
}

TEST_CASE("cli polar, curvature, strata, hemisphere, irreps, distance")
{
    Run r = run({"polar", "--space", "o2", "--row", "D"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["verdict"] == "non-polar");
    r = run({"polar", "--space", "o1", "--row", "B2"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["verdict"] == "polar");
    r = run({"polar", "--space", "o2", "--point", "[1,0,0,0,0,0,0,0]"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["verdict"] == "non-polar");

    r = run({"curvature", "--space", "o1", "--samples", "100"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["mean_kappa"].get<double>() == doctest::Approx(4.0).epsilon(1e-6));

    r = run({"strata", "--table", "1", "--samples", "5"});
    CHECK(r.code == cli::kPass);
    r = run({"strata", "--table", "2", "--samples", "2", "--emit-coords"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.rfind("r1,r2,alpha,stratum\n", 0) == 0);

    r = run({"hemisphere", "--max-degree", "2"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["rows"][1] == Json::parse(R"({"j":1,"lambda":12,"mult":3,"dirichlet":1})"));

    r = run({"irrep-invariants", "--max-boxes", "2"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["rows"].size() == 4);

    r = run({"distance", "--space", "o2", "--pairs", "2"});
    CHECK(r.code == cli::kPass);
    CHECK(Json::parse(r.out)["fixed_subspace_dim"] == 8);
}

TEST_CASE("cli usage errors exit 64")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"nonsense"}).code == cli::kUsage);
    CHECK(run({"compare", "--bogus"}).code == cli::kUsage);
    CHECK(run({"compare", "--n", "4"}).code == cli::kUsage);
    CHECK(run({"polar", "--space", "o2"}).code == cli::kUsage);
    CHECK(run({"polar", "--space", "o2", "--point", "[1,0]"}).code == cli::kUsage);
    CHECK(run({"strata", "--table", "3"}).code == cli::kUsage);
    CHECK(run({"spectrum", "--spec", "/nonexistent.json"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("cli claim failures exit 1 and inconclusive runs exit 2")
{
    // Thresholds loose enough to call the vertex polar contradict the table.
    Run r = run({"polar", "--space", "o2", "--row", "D", "--polar-tol", "10", "--nonpolar-tol", "20"});
    CHECK(r.code == cli::kClaimFails);
    r = run({"polar", "--space", "o2", "--row", "D", "--polar-tol", "1e-6", "--nonpolar-tol", "10"});
    CHECK(r.code == cli::kInconclusive);
    r = run({"curvature", "--space", "o1", "--samples", "5", "--curvature-tol", "0"});
    CHECK(r.code == cli::kClaimFails);
}

TEST_CASE("cli output is byte-identical across runs and embeds seed and tolerances")
{
    const std::vector<std::string> args{"strata", "--table", "2", "--samples", "3", "--seed", "17"};
    const Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["seed"] == 17);
    CHECK(j.contains("tolerances"));
    const std::vector<std::string> c{"curvature", "--space", "o2", "--toward-vertex", "--halvings", "2"};
    CHECK(run(c).out == run(c).out);

    const auto path = std::filesystem::temp_directory_path() / "ginv_out_test.json";
    std::vector<std::string> with_out{"--output", path.string()};
    with_out.insert(with_out.end(), args.begin(), args.end());
    const Run w = run(with_out);
    CHECK(w.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    std::filesystem::remove(path);
}
