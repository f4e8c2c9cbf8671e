#include "edm/potential.hpp"

#include <algorithm>
#include <cstdlib>

namespace edm {

namespace {

Site negate(const Site& z) {
    Site out = z;
    for (auto& c : out) c = -c;
    return out;
}

bool is_zero(const Site& z) {
    return std::all_of(z.begin(), z.end(), [](int c) { return c == 0; });
}

}  // namespace

Potential::Potential(int dimension, double monomer_energy, DimerSpec dimer, double beta)
    : dimension_(dimension), monomer_energy_(monomer_energy), dimer_(std::move(dimer)), beta_(beta) {
    if (beta_ <= 0.0) throw InvalidParams("Potential: beta must be positive");
    if (auto* r = std::get_if<RigidDimer>(&dimer_)) {
        if (static_cast<int>(r->alpha.size()) != dimension_)
            throw DimensionMismatch("Potential: rigid alpha size mismatch");
    } else if (auto* m = std::get_if<ManhattanDimer>(&dimer_)) {
        if (static_cast<int>(m->alpha.size()) != dimension_)
            throw DimensionMismatch("Potential: manhattan alpha size mismatch");
        for (double a : m->alpha)
            if (!(a > 0.0)) throw InvalidParams("Potential: manhattan alpha must be > 0");
    } else {
        const auto& t = std::get<TableDimer>(dimer_);
        for (const auto& [z, w] : t.entries) {
            if (static_cast<int>(z.size()) != dimension_)
                throw DimensionMismatch("Potential: table vector dimension mismatch");
            if (is_zero(z)) continue;
            auto it = t.entries.find(negate(z));
            // an asymmetric table is rejected rather than silently symmetrized
            if (it == t.entries.end() || it->second != w)
                throw InvalidParams("Potential: table must be explicitly symmetric");
        }
    }
}

double Potential::dimer_energy(const Site& z) const {
    if (static_cast<int>(z.size()) != dimension_)
        throw DimensionMismatch("Potential: dimer vector dimension mismatch");
    if (const auto* r = std::get_if<RigidDimer>(&dimer_)) {
        int axis = -1;
        for (int k = 0; k < dimension_; ++k) {
            if (z[k] == 0) continue;
            if (std::abs(z[k]) != 1 || axis >= 0) return kInf;
            axis = k;
        }
        if (axis < 0) return kInf;  // zero vector: rigid W(0) handled by the kernel layer
        return r->alpha[axis];
    }
    if (const auto* m = std::get_if<ManhattanDimer>(&dimer_)) {
        double w = 0.0;
        for (int k = 0; k < dimension_; ++k) w += m->alpha[k] * std::abs(z[k]);
        return w;
    }
    const auto& t = std::get<TableDimer>(dimer_);
    auto it = t.entries.find(z);
    return it == t.entries.end() ? kInf : it->second;
}

bool Potential::has_origin_entry() const {
    const auto* t = std::get_if<TableDimer>(&dimer_);
    if (!t) return false;
    return t->entries.count(Site(dimension_, 0)) > 0;
}

}  // namespace edm
