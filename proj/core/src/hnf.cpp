#include "cobord/hnf.hpp"

#include <algorithm>

namespace cobord {

namespace {

int first_nonzero(const std::vector<Int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

}  // namespace

void IntegerLattice::add(std::vector<Int> v, APoly label) {
    if (static_cast<int>(v.size()) != dim_) throw DomainError("IntegerLattice: dimension mismatch");
    size_t r = 0;
    while (true) {
        int lead = first_nonzero(v);
        if (lead < 0) return;  // dependent on existing rows
        while (r < rows_.size() && rows_[r].lead < lead) ++r;
        if (r == rows_.size() || rows_[r].lead > lead) {
            if (v[lead] < 0) {
                for (auto& x : v) x = -x;
                label = -label;
            }
            rows_.insert(rows_.begin() + r, Row{lead, std::move(v), std::move(label)});
            return;
        }
        Row& row = rows_[r];
        Int a = row.v[lead], b = v[lead];
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int qa = a / g, qb = b / g;
        std::vector<Int> combined(dim_), reduced(dim_);
        for (int i = 0; i < dim_; ++i) {
            combined[i] = s * row.v[i] + t * v[i];
            reduced[i] = qa * v[i] - qb * row.v[i];
        }
        APoly combined_lbl = row.label.scaled(s) + label.scaled(t);
        APoly reduced_lbl = label.scaled(qa) - row.label.scaled(qb);
        row.v = std::move(combined);
        row.label = std::move(combined_lbl);
        v = std::move(reduced);
        label = std::move(reduced_lbl);
        // v now vanishes at `lead`; keep reducing against later rows
    }
}

std::optional<APoly> IntegerLattice::express(std::vector<Int> v) const {
    if (static_cast<int>(v.size()) != dim_) throw DomainError("IntegerLattice: dimension mismatch");
    APoly acc;
    for (const Row& row : rows_) {
        // entries before row.lead can no longer change; any residue there fails
        if (v[row.lead] == 0) continue;
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[row.lead].get_mpz_t(),
                    row.v[row.lead].get_mpz_t());
        if (rem != 0) return std::nullopt;
        for (int i = 0; i < dim_; ++i) v[i] -= q * row.v[i];
        acc = acc + row.label.scaled(q);
    }
    if (first_nonzero(v) >= 0) return std::nullopt;
    return acc;
}

std::vector<MMono> weight_monomials(int n) {
    std::vector<MMono> out;
    MMono cur;
    cur.exps.assign(std::max(n, 0), 0);
    // descending-part partition enumeration: place parts of size <= `maxpart`
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            MMono m = cur;
            m.trim();
            out.push_back(std::move(m));
            return;
        }
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            ++cur.exps[part - 1];
            self(self, rem - part, part);
            --cur.exps[part - 1];
        }
    };
    if (n < 0) return out;
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

}  // namespace cobord
