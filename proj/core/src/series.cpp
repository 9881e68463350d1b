#include "cobord/series.hpp"

#include <algorithm>
#include <sstream>

namespace cobord {

namespace {

int clamp_trust(long t) {
    if (t >= Series::TRUST_INF) return Series::TRUST_INF;
    if (t <= Series::TRUST_NONE) return Series::TRUST_NONE;
    return static_cast<int>(t);
}

}  // namespace

Series::Series(Convention conv, long total_deg, int u_floor)
    : conv_(conv), total_deg_(total_deg), u_floor_(u_floor) {}

Series Series::zero(Convention conv, long total_deg, int u_floor) {
    return Series(conv, total_deg, u_floor);
}

Series Series::unit(Convention conv) {
    Series s(conv, 0, 0);
    s.set(0, 0, GradedRational::one());
    return s;
}

Series Series::monomial(Convention conv, int l, int j, const GradedRational& coeff) {
    int sh = conv == Convention::EulerWeights ? 2 : -2;
    Series s(conv, coeff.degree() - static_cast<long>(sh) * (l + j), std::min(j, 0));
    s.set(l, j, coeff);
    return s;
}

GradedRational Series::coeff(int l, int j) const {
    auto it = c_.find({l, j});
    return it == c_.end() ? GradedRational::zero() : it->second;
}

int Series::trust(int l) const {
    if (l < 0) return TRUST_INF;
    return l < static_cast<int>(row_trust_.size()) ? row_trust_[l] : tail_trust_;
}

void Series::set_row_trust(int l, int t) {
    if (l >= static_cast<int>(row_trust_.size())) row_trust_.resize(l + 1, tail_trust_);
    row_trust_[l] = t;
}

int Series::row_floor(int l) const {
    int t = trust(l);
    if (t == TRUST_NONE) return u_floor_;
    int lo = TRUST_INF;
    auto it = c_.lower_bound({l, TRUST_NONE});
    if (it != c_.end() && it->first.first == l) lo = it->first.second;
    if (lo < TRUST_INF) return lo;
    // row empty: zero through the trusted window
    return t == TRUST_INF ? TRUST_INF : std::max(u_floor_, t + 1);
}

int Series::x_val() const {
    for (int l = 0; l <= X_LIMIT; ++l)
        if (row_floor(l) < TRUST_INF) return l;
    return X_LIMIT + 1;
}

int Series::rows_end() const {
    if (tail_trust_ != TRUST_INF) return X_LIMIT + 1;
    int e = 0;
    int hi = static_cast<int>(row_trust_.size());
    if (!c_.empty()) hi = std::max(hi, c_.rbegin()->first.first + 1);
    for (int l = 0; l < hi; ++l)
        if (row_floor(l) < TRUST_INF) e = l + 1;
    return e;
}

void Series::set(int l, int j, GradedRational v) {
    if (l < 0) throw DomainError("Series: negative x exponent");
    if (j < u_floor_) u_floor_ = j;
    if (v.is_zero()) {
        c_.erase({l, j});
        return;
    }
    long want = total_deg_ + static_cast<long>(shift()) * (l + j);
    if (v.degree() != want)
        throw DomainError("Series: coefficient at x^" + std::to_string(l) + " u^" +
                          std::to_string(j) + " has degree " + std::to_string(v.degree()) +
                          ", expected " + std::to_string(want));
    c_[{l, j}] = std::move(v);
}

void Series::drop_untrusted() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->first.second > trust(it->first.first) || it->first.first > X_LIMIT)
            it = c_.erase(it);
        else
            ++it;
    }
}

Series Series::operator+(const Series& o) const {
    if (conv_ != o.conv_) throw DomainError("Series: convention mismatch in +");
    if (!empty() && !o.empty() && total_deg_ != o.total_deg_)
        throw DomainError("Series: adding total degrees " + std::to_string(total_deg_) + " and " +
                          std::to_string(o.total_deg_));
    Series r(conv_, empty() ? o.total_deg_ : total_deg_, std::min(u_floor_, o.u_floor_));
    r.tail_trust_ = std::min(tail_trust_, o.tail_trust_);
    size_t rows = std::max(row_trust_.size(), o.row_trust_.size());
    for (size_t l = 0; l < rows; ++l)
        r.set_row_trust(static_cast<int>(l),
                        std::min(trust(static_cast<int>(l)), o.trust(static_cast<int>(l))));
    std::map<std::pair<int, int>, GradedRational> acc = c_;
    for (const auto& [k, v] : o.c_) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    r.c_ = std::move(acc);
    r.drop_untrusted();
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    const Series& a = *this;
    const Series& b = o;
    if (a.conv_ != b.conv_) throw DomainError("Series: convention mismatch in *");
    Series r(a.conv_, a.total_deg_ + b.total_deg_, a.u_floor_ + b.u_floor_);

    int ea = a.rows_end(), eb = b.rows_end();
    long end = static_cast<long>(ea) + eb - 1;
    if (ea == 0 || eb == 0) end = 0;  // a factor is identically zero
    r.tail_trust_ = end <= X_LIMIT + 1 ? TRUST_INF : TRUST_NONE;
    int lmax = static_cast<int>(std::min<long>(end, X_LIMIT + 1)) - 1;

    for (int l = 0; l <= lmax; ++l) {
        long t = TRUST_INF;
        for (int k = 0; k <= l; ++k) {
            int fa = a.row_floor(l - k), fb = b.row_floor(k);
            if (fa == TRUST_INF || fb == TRUST_INF) continue;
            int ta = a.trust(l - k), tb = b.trust(k);
            if (ta == TRUST_NONE || tb == TRUST_NONE) {
                t = TRUST_NONE;
                break;
            }
            t = std::min(t, std::min(static_cast<long>(ta) + fb, static_cast<long>(tb) + fa));
        }
        r.set_row_trust(l, clamp_trust(t));
    }

    std::map<std::pair<int, int>, GradedRational> acc;
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            int l = ka.first + kb.first, j = ka.second + kb.second;
            if (l > lmax || j > r.trust(l)) continue;
            GradedRational p = va * vb;
            if (p.is_zero()) continue;
            auto it = acc.find({l, j});
            if (it == acc.end()) {
                acc.emplace(std::make_pair(l, j), std::move(p));
            } else {
                it->second += p;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    r.c_ = std::move(acc);
    return r;
}

Series Series::scaled(const GradedRational& g) const {
    Series r(conv_, total_deg_ + g.degree(), u_floor_);
    r.tail_trust_ = tail_trust_;
    r.row_trust_ = row_trust_;
    if (!g.is_zero())
        for (const auto& [k, v] : c_) {
            GradedRational p = v * g;
            if (!p.is_zero()) r.c_.emplace(k, std::move(p));
        }
    return r;
}

Series Series::scaled(const Rat& q) const {
    Series r(conv_, total_deg_, u_floor_);
    r.tail_trust_ = tail_trust_;
    r.row_trust_ = row_trust_;
    if (q != 0)
        for (const auto& [k, v] : c_) r.c_.emplace(k, v.scaled(q));
    return r;
}

Series Series::shifted_u(int s) const {
    int sh = shift();
    Series r(conv_, total_deg_ - static_cast<long>(sh) * s, u_floor_ + s);
    r.tail_trust_ = clamp_trust(static_cast<long>(tail_trust_) + s);
    for (int t : row_trust_) r.row_trust_.push_back(clamp_trust(static_cast<long>(t) + s));
    for (const auto& [k, v] : c_) r.c_.emplace(std::make_pair(k.first, k.second + s), v);
    return r;
}

Series Series::truncated(int l_max, int u_max) const {
    Series r(conv_, total_deg_, u_floor_);
    r.tail_trust_ = tail_trust_ == TRUST_INF ? TRUST_INF : TRUST_NONE;
    int hi = static_cast<int>(row_trust_.size());
    if (!c_.empty()) hi = std::max(hi, c_.rbegin()->first.first + 1);
    for (int l = 0; l < hi; ++l) {
        if (l <= l_max)
            r.set_row_trust(l, std::min(trust(l), u_max));
        else
            r.set_row_trust(l, row_floor(l) == TRUST_INF ? TRUST_INF : TRUST_NONE);
    }
    for (int l = hi; l <= l_max; ++l) r.set_row_trust(l, std::min(trust(l), u_max));
    for (const auto& [k, v] : c_)
        if (k.first <= l_max && k.second <= u_max) r.c_.emplace(k, v);
    r.drop_untrusted();
    return r;
}

Series Series::truncated_triangle(int order) const {
    Series r(conv_, total_deg_, u_floor_);
    r.tail_trust_ = tail_trust_ == TRUST_INF ? TRUST_INF : TRUST_NONE;
    int hi = static_cast<int>(row_trust_.size());
    if (!c_.empty()) hi = std::max(hi, c_.rbegin()->first.first + 1);
    hi = std::max(hi, std::min(order + 1, X_LIMIT + 1));
    for (int l = 0; l < hi; ++l) {
        if (l > order)
            r.set_row_trust(l, row_floor(l) == TRUST_INF ? TRUST_INF : TRUST_NONE);
        else
            r.set_row_trust(l, std::min(trust(l), order - l));
    }
    for (const auto& [k, v] : c_)
        if (k.first + k.second <= order) r.c_.emplace(k, v);
    r.drop_untrusted();
    return r;
}

Series Series::inverted_unit() const {
    int v = row_floor(0);
    if (v >= TRUST_INF) throw DomainError("Series: inverting a series with no constant-row term");
    GradedRational lead = coeff(0, v);
    if (!lead.is_rational_constant() || lead.is_zero())
        throw DomainError("Series: leading term is not an invertible rational");
    Rat c = lead.as_rational();
    // *this = c u^v (1 + w); inverse = (1/c) u^{-v} sum (-w)^n
    Series w = scaled(Rat(1) / c).shifted_u(-v) - unit(conv_);
    Series term = unit(conv_);
    Series acc = unit(conv_);
    for (int n = 0; n < 400; ++n) {
        term = term * (-w);
        if (term.c_.empty()) break;
        acc = acc + term;
        if (n == 399)
            throw TruncationError("Series: geometric inversion did not terminate", 400);
    }
    return acc.scaled(Rat(1) / c).shifted_u(-v);
}

bool Series::agrees_with(const Series& o, int min_x, int min_u) const {
    Series d = *this - o;
    return d.is_zero_within(min_x, min_u);
}

bool Series::is_zero_within(int min_x, int min_u) const {
    if (!c_.empty()) return false;
    for (int l = 0; l <= min_x; ++l)
        if (trust(l) < min_u) return false;
    return true;
}

std::string Series::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        if (!first) os << " + ";
        os << "(" << v.str() << ")";
        if (k.first != 0) {
            os << "*x";
            if (k.first != 1) os << "^" << k.first;
        }
        if (k.second != 0) {
            os << "*u";
            if (k.second != 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

Series compose(const std::vector<GradedRational>& outer, const Series& inner) {
    int R = static_cast<int>(outer.size()) - 1;
    while (R >= 0 && outer[R].is_zero()) --R;
    if (R < 0) return Series::zero(inner.conv(), 0);
    int sh = inner.conv() == Convention::EulerWeights ? 2 : -2;
    auto constant = [&](const GradedRational& g) {
        Series s(inner.conv(), g.degree());
        if (!g.is_zero()) s.set(0, 0, g);
        return s;
    };
    // Horner; totals stay consistent when deg(outer[r]) + r*deg(t) is constant.
    (void)sh;
    Series acc = constant(outer[R]);
    for (int r = R - 1; r >= 0; --r) {
        acc = acc * inner;
        if (!outer[r].is_zero()) acc = acc + constant(outer[r]);
    }
    return acc;
}

std::vector<GradedRational> antipode(const std::vector<GradedRational>& b) {
    if (b.empty() || !b[0].is_rational_constant() || b[0].is_zero())
        throw DomainError("antipode: constant term must be an invertible rational");
    Rat c0 = b[0].as_rational();
    std::vector<GradedRational> d(b.size());
    d[0] = GradedRational::rational(Rat(1) / c0);
    for (size_t l = 1; l < b.size(); ++l) {
        GradedRational s;
        for (size_t k = 1; k <= l; ++k) s += b[k] * d[l - k];
        d[l] = s.scaled(-Rat(1) / c0);
    }
    return d;
}

}  // namespace cobord
