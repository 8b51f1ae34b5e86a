#include "iso/rational.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace iso {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw domain_error("bad rational literal: " + s);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw domain_error("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw domain_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat& q, unsigned e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    // num/den already coprime, so the power is canonical too
    return r;
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t int_to_i64(const Int& z) {
    if (!z.fits_slong_p()) throw domain_error("integer out of 64-bit range: " + z.get_str());
    long v = z.get_si();
    static_assert(sizeof(long) == 8, "64-bit long expected");
    return static_cast<std::int64_t>(v);
}

double to_double(const Rat& q) { return q.get_d(); }

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RootBounds nth_root_bounds(const Rat& v, unsigned d, const Int& scale) {
    if (sgn(v) < 0) throw domain_error("nth_root_bounds: negative argument");
    if (d == 0) throw domain_error("nth_root_bounds: zero exponent");
    RootBounds rb;
    if (sgn(v) == 0) {
        rb.lo = rb.hi = 0;
        rb.exact = true;
        return rb;
    }
    // m = floor((v * scale^d)^(1/d)) gives m/scale <= v^(1/d) < (m+1)/scale.
    Int num_scaled;
    mpz_pow_ui(num_scaled.get_mpz_t(), scale.get_mpz_t(), d);
    num_scaled *= v.get_num();
    Int t;
    mpz_fdiv_q(t.get_mpz_t(), num_scaled.get_mpz_t(), v.get_den_mpz_t());
    Int m;
    int was_exact_root = mpz_root(m.get_mpz_t(), t.get_mpz_t(), d);
    rb.lo = Rat(m) / Rat(scale);
    rb.lo.canonicalize();
    // Exact iff (m/scale)^d == v, i.e. the floor division lost nothing and
    // t was a perfect d-th power.
    Int md;
    mpz_pow_ui(md.get_mpz_t(), m.get_mpz_t(), d);
    if (was_exact_root != 0 && md * v.get_den() == num_scaled) {
        rb.hi = rb.lo;
        rb.exact = true;
        return rb;
    }
    rb.hi = Rat(m + 1) / Rat(scale);
    rb.hi.canonicalize();
    return rb;
}

namespace {

// x = u^d * f with f free of d-th power divisors. Found by scanning u down
// from floor(x^(1/d)); cheap at the magnitudes produced by set cardinalities.
void power_free_split(const Int& x, unsigned d, Int& u, Int& f) {
    if (sgn(x) == 0) {
        u = 0;
        f = 1;
        return;
    }
    Int r;
    mpz_root(r.get_mpz_t(), x.get_mpz_t(), d);
    if (r > 4'000'000) throw domain_error("cmp_root_sum: argument too large");
    for (Int c = r; c >= 1; --c) {
        Int cd;
        mpz_pow_ui(cd.get_mpz_t(), c.get_mpz_t(), d);
        if (mpz_divisible_p(x.get_mpz_t(), cd.get_mpz_t())) {
            u = c;
            f = x / cd;
            return;
        }
    }
    u = 1;
    f = x;
}

}  // namespace

int cmp_root_sum(const Int& m, const Int& x, const Int& y, unsigned d, unsigned slack) {
    if (d == 0) throw domain_error("cmp_root_sum: zero exponent");
    if (sgn(m) < 0 || sgn(x) < 0 || sgn(y) < 0) throw domain_error("cmp_root_sum: negative argument");
    if (slack > 1) throw domain_error("cmp_root_sum: slack must be 0 or 1");

    Int um, fm, ux, fx, uy, fy;
    power_free_split(m, d, um, fm);
    power_free_split(x, d, ux, fx);
    power_free_split(y, d, uy, fy);

    // Equality patterns. Zero terms have f == 1, so they fold into the
    // rational part together with the slack.
    Int lhs_rat = slack, rhs_rat = 0;  // coefficients of 1 == 1^(1/d)
    Int lhs_irr = 0, rhs_irr = 0;      // coefficients of the shared radical
    Int rad = 1;
    bool pattern_ok = true;
    auto account = [&](const Int& u, const Int& f, Int& ratpart, Int& irrpart) {
        if (f == 1) {
            ratpart += u;
            return;
        }
        if (rad == 1)
            rad = f;
        else if (rad != f)
            pattern_ok = false;
        irrpart += u;
    };
    account(um, fm, lhs_rat, lhs_irr);
    account(ux, fx, rhs_rat, rhs_irr);
    account(uy, fy, rhs_rat, rhs_irr);
    if (pattern_ok) {
        // Difference is (lhs_rat - rhs_rat) + (lhs_irr - rhs_irr) * rad^(1/d).
        // When either bracket vanishes the sign is immediate.
        if (lhs_irr == rhs_irr) return cmp(lhs_rat, rhs_rat);
        if (lhs_rat == rhs_rat) return cmp(lhs_irr, rhs_irr);
    }

    // Not equal, so intervals must eventually separate.
    Int scale = 1'000'000;
    for (int round = 0; round < 12; ++round) {
        RootBounds bm = nth_root_bounds(Rat(m), d, scale);
        RootBounds bx = nth_root_bounds(Rat(x), d, scale);
        RootBounds by = nth_root_bounds(Rat(y), d, scale);
        Rat lhs_lo = bm.lo + slack, lhs_hi = bm.hi + slack;
        Rat rhs_lo = bx.lo + by.lo, rhs_hi = bx.hi + by.hi;
        if (lhs_lo > rhs_hi) return 1;
        if (lhs_hi < rhs_lo) return -1;
        scale *= scale;
    }
    throw domain_error("cmp_root_sum: failed to separate");
}

}  // namespace iso
