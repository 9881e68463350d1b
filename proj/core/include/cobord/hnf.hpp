#pragma once

#include <optional>
#include <vector>

#include "cobord/mpoly.hpp"
#include "cobord/witness.hpp"

namespace cobord {

// Sublattice of Z^dim maintained in row-echelon form under integer row
// operations. Each spanning vector carries an APoly label; express() returns
// the matching integer combination of labels for a member vector.
class IntegerLattice {
  public:
    explicit IntegerLattice(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    void add(std::vector<Int> v, APoly label);
    std::optional<APoly> express(std::vector<Int> v) const;
    bool contains(std::vector<Int> v) const { return express(std::move(v)).has_value(); }

  private:
    struct Row {
        int lead;
        std::vector<Int> v;
        APoly label;
    };
    int dim_;
    std::vector<Row> rows_;  // strictly increasing lead indices
};

// All monomials in m_1, m_2, ... of weight n (topological degree 2n),
// in a fixed deterministic order.
std::vector<MMono> weight_monomials(int n);

}  // namespace cobord
