#include "iso/pointset.hpp"

#include <algorithm>

namespace iso {

Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw domain_error("coordinate overflow in addition");
    return r;
}

Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw domain_error("coordinate overflow in multiplication");
    return r;
}

Pt pt_add(const Pt& a, const Pt& b) {
    if (a.size() != b.size()) throw domain_error("point dimension mismatch");
    Pt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Pt pt_sub(const Pt& a, const Pt& b) {
    if (a.size() != b.size()) throw domain_error("point dimension mismatch");
    Pt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Coord v;
        if (__builtin_sub_overflow(a[i], b[i], &v)) throw domain_error("coordinate overflow in subtraction");
        r[i] = v;
    }
    return r;
}

Pt pt_neg(const Pt& a) {
    Pt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Coord v;
        if (__builtin_sub_overflow(Coord{0}, a[i], &v)) throw domain_error("coordinate overflow in negation");
        r[i] = v;
    }
    return r;
}

PointSet::PointSet(int d) : d_(d) {
    if (d < 1) throw domain_error("point set dimension must be positive");
}

PointSet::PointSet(int d, const std::vector<Pt>& pts) : PointSet(d) {
    for (const Pt& p : pts) insert(p);
}

void PointSet::insert(Pt p) {
    if (static_cast<int>(p.size()) != d_) throw domain_error("point dimension mismatch");
    if (pts_.empty()) {
        lo_ = p;
        hi_ = p;
    } else {
        for (int i = 0; i < d_; ++i) {
            lo_[i] = std::min(lo_[i], p[i]);
            hi_[i] = std::max(hi_[i], p[i]);
        }
    }
    pts_.insert(std::move(p));
}

std::vector<Pt> PointSet::sorted() const {
    std::vector<Pt> v(pts_.begin(), pts_.end());
    std::sort(v.begin(), v.end());
    return v;
}

std::pair<Pt, Pt> PointSet::bbox() const {
    if (pts_.empty()) throw domain_error("bbox of empty point set");
    return {lo_, hi_};
}

PointSet PointSet::translated(const Pt& v) const {
    PointSet r(d_);
    for (const Pt& p : pts_) r.insert(pt_add(p, v));
    return r;
}

PointSet sumset(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw domain_error("sumset: dimension mismatch");
    if (a.empty() || b.empty()) throw domain_error("sumset of empty set");
    PointSet r(a.dim());
    for (const Pt& p : a.raw())
        for (const Pt& q : b.raw()) r.insert(pt_add(p, q));
    return r;
}

PointSet iterated_sumset(const PointSet& b, unsigned k) {
    if (b.empty()) throw domain_error("iterated_sumset of empty set");
    if (k == 0) {
        PointSet r(b.dim());
        r.insert(Pt(b.dim(), 0));
        return r;
    }
    PointSet r = b;
    for (unsigned i = 1; i < k; ++i) r = sumset(r, b);
    return r;
}

PointSet subset_sums(const PointSet& b, std::size_t cap) {
    if (b.empty()) throw domain_error("subset_sums of empty set");
    if (b.size() > cap) throw domain_error("subset_sums: generator count exceeds cap");
    PointSet r(b.dim());
    r.insert(Pt(b.dim(), 0));
    for (const Pt& g : b.sorted()) {
        PointSet next = r;
        for (const Pt& p : r.raw()) next.insert(pt_add(p, g));
        r = std::move(next);
    }
    return r;
}

std::int64_t vertex_boundary(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw domain_error("vertex_boundary: dimension mismatch");
    if (a.empty() || b.empty()) throw domain_error("vertex_boundary of empty set");
    PointSet b0 = b;
    b0.insert(Pt(b.dim(), 0));
    PointSet s = sumset(a, b0);
    return static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(a.size());
}

std::int64_t edge_boundary(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw domain_error("edge_boundary: dimension mismatch");
    if (a.empty() || b.empty()) throw domain_error("edge_boundary of empty set");
    std::int64_t count = 0;
    for (const Pt& p : a.raw())
        for (const Pt& s : b.raw())
            if (!a.contains(pt_add(p, s))) ++count;
    return count;
}

}  // namespace iso
