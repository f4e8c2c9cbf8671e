#include "edm/json_io.hpp"

#include <cmath>

namespace edm {

namespace {

Json energy_to_json(double e) {
    if (std::isinf(e)) return "inf";
    return e;
}

double energy_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw InvalidParams("json: energy must be a number or \"inf\"");
    }
    return j.get<double>();
}

}  // namespace

Json region_to_json(const Region& region) {
    Json j;
    j["dimension"] = region.dimension();
    j["sites"] = region.sites();
    return j;
}

Region region_from_json(const Json& j) {
    return Region(j.at("dimension").get<int>(),
                  j.at("sites").get<std::vector<Site>>());
}

Json potential_to_json(const Potential& potential) {
    Json j;
    j["V"] = energy_to_json(potential.monomer_energy());
    j["beta"] = potential.beta();
    Json dimer;
    if (const auto* r = std::get_if<RigidDimer>(&potential.dimer())) {
        dimer["kind"] = "rigid";
        dimer["alpha"] = r->alpha;
    } else if (const auto* m = std::get_if<ManhattanDimer>(&potential.dimer())) {
        dimer["kind"] = "manhattan";
        dimer["alpha"] = m->alpha;
    } else {
        const auto& t = std::get<TableDimer>(potential.dimer());
        dimer["kind"] = "table";
        Json entries = Json::array();
        for (const auto& [z, w] : t.entries)
            entries.push_back({{"z", z}, {"W", energy_to_json(w)}});
        dimer["entries"] = entries;
    }
    j["dimer"] = dimer;
    return j;
}

Potential potential_from_json(const Json& j) {
    const double v = energy_from_json(j.at("V"));
    const double beta = j.at("beta").get<double>();
    const Json& dimer = j.at("dimer");
    const std::string kind = dimer.at("kind").get<std::string>();
    int dimension;
    DimerSpec spec;
    if (kind == "rigid") {
        auto alpha = dimer.at("alpha").get<std::vector<double>>();
        dimension = static_cast<int>(alpha.size());
        spec = RigidDimer{std::move(alpha)};
    } else if (kind == "manhattan") {
        auto alpha = dimer.at("alpha").get<std::vector<double>>();
        dimension = static_cast<int>(alpha.size());
        spec = ManhattanDimer{std::move(alpha)};
    } else if (kind == "table") {
        TableDimer t;
        dimension = 0;
        for (const auto& entry : dimer.at("entries")) {
            Site z = entry.at("z").get<Site>();
            dimension = static_cast<int>(z.size());
            t.entries[std::move(z)] = energy_from_json(entry.at("W"));
        }
        if (dimension == 0) throw InvalidParams("json: empty table potential");
        spec = std::move(t);
    } else {
        throw InvalidParams("json: unknown dimer kind '" + kind + "'");
    }
    return Potential(dimension, v, std::move(spec), beta);
}

Json kernel_to_json(const GaussianKernel& kernel) {
    Json j;
    j["dimension"] = kernel.dimension();
    j["mu"] = kernel.mean();
    j["C0"] = kernel.c0();
    switch (kernel.kind()) {
        case GaussianKernel::Kind::Manhattan:
            j["kind"] = "manhattan";
            j["rho"] = kernel.rho();
            break;
        case GaussianKernel::Kind::Rigid:
            j["kind"] = "rigid";
            j["rho"] = kernel.rho();
            break;
        case GaussianKernel::Kind::Table: {
            j["kind"] = "table";
            Json support = Json::array();
            for (const auto& [z, c] : kernel.support())
                support.push_back({{"z", z}, {"C", c}});
            j["support"] = support;
            break;
        }
    }
    return j;
}

Json polynomial_to_json(const SparsePolynomial& poly) {
    Json j;
    std::vector<std::string> vars;
    for (int i = 0; i < poly.n_vars(); ++i) vars.push_back("s" + std::to_string(i));
    j["vars"] = vars;
    Json terms = Json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back({{"exps", e}, {"coef", c}});
    j["terms"] = terms;
    return j;
}

SparsePolynomial polynomial_from_json(const Json& j) {
    SparsePolynomial p(static_cast<int>(j.at("vars").size()));
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("exps").get<SparsePolynomial::Exponents>(),
                   term.at("coef").get<double>());
    return p;
}

}  // namespace edm
