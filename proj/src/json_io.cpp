#include "ginv/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

WeightVector weight_from_json(const Json &j)
{
    if (!j.is_array()) throw InvalidSpec("weight must be an array of integers");
    std::vector<int> e;
    for (const auto &x : j) {
        if (!x.is_number_integer()) throw InvalidSpec("weight entries must be integers");
        e.push_back(x.get<int>());
    }
    return WeightVector(std::move(e));
}

Json weight_to_json(const WeightVector &w) { return Json(w.exponents()); }

std::vector<WeightMultiplicity> sorted(std::vector<WeightMultiplicity> ws)
{
    std::sort(ws.begin(), ws.end(), [](const auto &a, const auto &b) { return a.weight < b.weight; });
    return ws;
}

} // namespace

Json group_spec_to_json(const GroupSpec &g)
{
    Json j;
    j["factors"] = Json::array();
    for (const auto &f : g.factors()) j["factors"].push_back({{"family", family_name(f.family)}, {"rank", f.rank}});
    j["ambient_weights"] = Json::array();
    j["multiplicity"] = Json::array();
    for (const auto &w : g.ambient_weights()) {
        j["ambient_weights"].push_back(weight_to_json(w.weight));
        j["multiplicity"].push_back(w.multiplicity);
    }
    if (g.has_complex_weights()) {
        j["complex_weights"] = Json::array();
        for (const auto &w : g.complex_weights()) j["complex_weights"].push_back(weight_to_json(w));
    }
    return j;
}

GroupSpec group_spec_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
        throw InvalidSpec("group spec needs a non-empty 'factors' array");
    std::optional<GroupSpec> g;
    for (const auto &f : j["factors"]) {
        if (!f.contains("family") || !f.contains("rank")) throw InvalidSpec("factor needs 'family' and 'rank'");
        const Family fam = family_from_name(f["family"].get<std::string>());
        const int rank = f["rank"].get<int>();
        GroupSpec part;
        try {
            switch (fam) {
            case Family::Unitary: part = make_unitary(rank); break;
            case Family::Symplectic: part = make_symplectic(rank); break;
            case Family::SOEven: part = make_so_even(rank); break;
            }
        } catch (const InvalidParameter &e) {
            throw InvalidSpec(e.what());
        }
        g = g ? product(*g, part) : part;
    }

    std::vector<WeightMultiplicity> ambient;
    if (j.contains("ambient_weights")) {
        const auto &ws = j["ambient_weights"];
        if (!ws.is_array()) throw InvalidSpec("'ambient_weights' must be an array");
        std::vector<int> mult(ws.size(), 1);
        if (j.contains("multiplicity")) {
            const auto &ms = j["multiplicity"];
            if (!ms.is_array() || ms.size() != ws.size())
                throw InvalidSpec("'multiplicity' must have one entry per ambient weight");
            for (std::size_t i = 0; i < ms.size(); ++i) mult[i] = ms[i].get<int>();
        }
        for (std::size_t i = 0; i < ws.size(); ++i) ambient.push_back({weight_from_json(ws[i]), mult[i]});
    }

    if (j.contains("complex_weights")) {
        std::vector<WeightVector> cw;
        for (const auto &w : j["complex_weights"]) cw.push_back(weight_from_json(w));
        GroupSpec out = g->with_complex_representation(std::move(cw));
        if (!ambient.empty()) {
            // Compare as weight -> total multiplicity maps.
            std::map<WeightVector, int> a, b;
            for (const auto &w : ambient) a[w.weight] += w.multiplicity;
            for (const auto &w : out.ambient_weights()) b[w.weight] += w.multiplicity;
            if (a != b) throw InvalidSpec("ambient_weights disagree with the realification of complex_weights");
        }
        return out;
    }
    if (ambient.empty()) return *g;
    return g->with_ambient_weights(sorted(std::move(ambient)));
}

GroupSpec load_group_spec(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open group spec file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InvalidSpec(std::string("group spec is not valid JSON: ") + e.what());
    }
    return group_spec_from_json(j);
}

Json to_json(const geom::Vec &v)
{
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

geom::Vec vec_from_json(const Json &j)
{
    if (!j.is_array()) throw InvalidInput("expected a JSON array of numbers");
    geom::Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw InvalidInput("expected a JSON array of numbers");
        v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
    }
    return v;
}

Json to_json(const geom::Mat &m)
{
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(to_json(geom::Vec(m.row(r).transpose())));
    return rows;
}

} // namespace ginv
