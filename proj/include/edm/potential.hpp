#pragma once

#include <map>
#include <variant>
#include <vector>

#include "edm/common.hpp"
#include "edm/region.hpp"

namespace edm {

// Rigid nearest-neighbour dimers: energy alpha_k along axis k, +inf elsewhere.
struct RigidDimer {
    std::vector<double> alpha;
};

// Weighted l1-distance dimer potential, W(z) = sum_k alpha_k |z_k|.
struct ManhattanDimer {
    std::vector<double> alpha;  // all > 0
};

// Explicit symmetric table; vectors absent from the table are prohibited.
// May contain an entry for the zero vector (the extension of W to the origin).
struct TableDimer {
    std::map<Site, double> entries;
};

using DimerSpec = std::variant<RigidDimer, ManhattanDimer, TableDimer>;

class Potential {
  public:
    Potential(int dimension, double monomer_energy, DimerSpec dimer, double beta);

    int dimension() const { return dimension_; }
    double monomer_energy() const { return monomer_energy_; }
    double beta() const { return beta_; }
    const DimerSpec& dimer() const { return dimer_; }

    // Dimer energy W(z); +inf for prohibited vectors. z must be nonzero
    // unless the table explicitly extends W to the origin.
    double dimer_energy(const Site& z) const;

    // True if W has an explicit value at the origin (Table case only).
    bool has_origin_entry() const;

  private:
    int dimension_;
    double monomer_energy_;
    DimerSpec dimer_;
    double beta_;
};

}  // namespace edm
