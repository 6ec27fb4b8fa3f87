#include "mdh/bdiagram.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mdh {

void validate_diagram(const BDiagram& d) {
    if (d.degree < 0) throw Error("diagram degree must be non-negative");
    if (d.breakpoints.empty()) throw Error("diagram needs at least the breakpoint 1");
    if (d.breakpoints.front() != 1) throw Error("the first breakpoint must be 1");
    for (std::size_t j = 0; j + 1 < d.breakpoints.size(); ++j)
        if (!(d.breakpoints[j] < d.breakpoints[j + 1]))
            throw Error("breakpoints must increase strictly");
    if (d.ranks.size() != d.breakpoints.size() + 1)
        throw Error("diagram needs one rank per interval");
    if (d.steps.size() != d.breakpoints.size())
        throw Error("diagram needs one step per breakpoint");
    for (const int r : d.ranks)
        if (r < 0) throw Error("ranks must be non-negative");
    for (std::size_t j = 0; j < d.steps.size(); ++j)
        if (d.steps[j].rows() != d.ranks[j] || d.steps[j].cols() != d.ranks[j + 1])
            throw Error("step " + std::to_string(j) + " has the wrong shape");
}

int interval_of(const BDiagram& d, const ExtRat& b) {
    if (!b.is_infinite() && !(b.finite() > 0)) throw Error("evaluation points must be positive");
    if (b.is_infinite()) return static_cast<int>(d.breakpoints.size());
    int j = 0;
    while (j < static_cast<int>(d.breakpoints.size()) &&
           !(b.finite() < d.breakpoints[static_cast<std::size_t>(j)]))
        ++j;
    return j; // b < t_1 lands in I_0
}

int evaluate(const BDiagram& d, const ExtRat& b) {
    return d.ranks[static_cast<std::size_t>(interval_of(d, b))];
}

IntMatrix morphism_matrix(const BDiagram& d, const ExtRat& b1, const ExtRat& b2) {
    if (b1 < b2) throw Error("morphisms go downwards: need b1 >= b2");
    const int u = interval_of(d, b1);
    const int l = interval_of(d, b2);
    IntMatrix m = IntMatrix::identity(d.ranks[static_cast<std::size_t>(l)]);
    for (int j = l; j < u; ++j) m = matmul(m, d.steps[static_cast<std::size_t>(j)]);
    return m;
}

void validate_framed(const FramedDiagram& f) {
    validate_diagram(f.deg0);
    validate_diagram(f.deg1);
    if (f.deg0.breakpoints != f.deg1.breakpoints)
        throw Error("the two degrees must share one ladder");
    if (static_cast<int>(f.inf_basis.size()) != f.deg0.ranks.back() ||
        static_cast<int>(f.inf_basis.size()) != f.deg1.ranks.back())
        throw Error("inf_basis must label the generators on the last interval");
    if (static_cast<int>(f.one_basis.size()) != f.deg0.ranks[1])
        throw Error("one_basis must label the generators on the interval of b = 1");
    for (const auto* basis : {&f.inf_basis, &f.one_basis}) {
        std::vector<std::string> ids(*basis);
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i].empty()) throw Error("basis labels must be non-empty");
            if (i && ids[i] == ids[i - 1]) throw Error("basis label " + ids[i] + " repeats");
        }
    }
}

std::vector<Rat> jumping_rates(const BDiagram& deg0, const BDiagram& deg1) {
    validate_diagram(deg0);
    validate_diagram(deg1);
    if (deg0.breakpoints != deg1.breakpoints)
        throw Error("the two degrees must share one ladder");
    std::vector<Rat> out;
    for (std::size_t j = 0; j < deg0.breakpoints.size(); ++j)
        if (!is_unimodular(deg0.steps[j]) || !is_unimodular(deg1.steps[j]))
            out.push_back(deg0.breakpoints[j]);
    return out;
}

std::vector<Rat> jumping_rates(const FramedDiagram& f) { return jumping_rates(f.deg0, f.deg1); }

DiagramSignature invariant_signature(const BDiagram& d) {
    validate_diagram(d);
    DiagramSignature sig;
    sig.ladder = d.breakpoints;
    sig.ranks = d.ranks;
    const int n = static_cast<int>(d.breakpoints.size());
    for (int l = 0; l <= n; ++l) {
        IntMatrix m = IntMatrix::identity(d.ranks[static_cast<std::size_t>(l)]);
        sig.composite_factors.push_back(snf(m).invariant_factors);
        for (int u = l + 1; u <= n; ++u) {
            m = matmul(m, d.steps[static_cast<std::size_t>(u - 1)]);
            sig.composite_factors.push_back(snf(m).invariant_factors);
        }
    }
    return sig;
}

std::string verdict_to_string(Verdict v) {
    return v == Verdict::Distinguished ? "Distinguished" : "NotDistinguished";
}

Verdict compare_unframed(const BDiagram& a0, const BDiagram& a1, const BDiagram& b0,
                         const BDiagram& b1) {
    const bool same = invariant_signature(a0) == invariant_signature(b0) &&
                      invariant_signature(a1) == invariant_signature(b1);
    return same ? Verdict::NotDistinguished : Verdict::Distinguished;
}

Verdict compare_unframed(const FramedDiagram& a, const FramedDiagram& b) {
    return compare_unframed(a.deg0, a.deg1, b.deg0, b.deg1);
}

CurveShape analyze_curve_shape(const FramedDiagram& f) {
    validate_framed(f);
    const BDiagram& d0 = f.deg0;
    const BDiagram& d1 = f.deg1;
    const int nsteps = static_cast<int>(d0.breakpoints.size());
    // ranks agree except on I_0, where the degrees are (1, 0)
    if (d0.ranks[0] != 1) throw Error("a curve diagram has degree-0 rank 1 below b = 1");
    if (d1.ranks[0] != 0) throw Error("a curve diagram has degree-1 rank 0 below b = 1");
    for (std::size_t j = 1; j < d0.ranks.size(); ++j) {
        if (d0.ranks[j] != d1.ranks[j])
            throw Error("curve diagram ranks must agree across degrees above b = 1");
        if (d0.ranks[j] < 1) throw Error("curve diagram ranks are positive above b = 1");
    }
    if (d0.steps[0] != IntMatrix::ones(1, d0.ranks[1]))
        throw Error("the degree-0 step into (0,1) must be a row of ones");
    for (int j = 1; j < nsteps; ++j) {
        const IntMatrix& m0 = d0.steps[static_cast<std::size_t>(j)];
        const IntMatrix& m1 = d1.steps[static_cast<std::size_t>(j)];
        for (int c = 0; c < m0.cols(); ++c) {
            int hits = 0;
            for (int r = 0; r < m0.rows(); ++r) {
                const Int& e0 = m0.at(r, c);
                const Int& e1 = m1.at(r, c);
                if (e0 != 0 && e0 != 1)
                    throw Error("degree-0 steps of a curve diagram are 0/1 matrices");
                if (e0 == 1) {
                    ++hits;
                    if (e1 < 1) throw Error("degree-1 multipliers must be positive integers");
                } else if (e1 != 0) {
                    throw Error("degree-1 steps must vanish off the degree-0 support");
                }
            }
            if (hits != 1)
                throw Error("each generator must map to exactly one generator one level down");
        }
        for (int r = 0; r < m0.rows(); ++r) {
            bool hit = false;
            for (int c = 0; c < m0.cols(); ++c)
                if (m0.at(r, c) == 1) hit = true;
            if (!hit) throw Error("every generator must be hit from the level above");
        }
    }

    // Per-branch paths down the staircase: point[j][i] is the generator of
    // interval I_{j+1} that branch i (column i of I_N) lands on.
    const std::size_t n = static_cast<std::size_t>(d0.ranks.back());
    const std::size_t levels = static_cast<std::size_t>(nsteps);
    std::vector<std::vector<int>> point(levels, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) point[levels - 1][i] = static_cast<int>(i);
    for (std::size_t j = levels - 1; j >= 1; --j) {
        const IntMatrix& m0 = d0.steps[j];
        for (std::size_t i = 0; i < n; ++i)
            for (int r = 0; r < m0.rows(); ++r)
                if (m0.at(r, point[j][i]) == 1) point[j - 1][i] = r;
    }

    CurveShape shape;
    for (std::size_t i = 0; i < n; ++i) {
        BranchInvariants bi;
        bi.id = f.inf_basis[i];
        for (std::size_t j = 1; j < levels; ++j) {
            const Int& k = d1.steps[j].at(point[j - 1][i], point[j][i]);
            if (k > 1) bi.jumps.push_back(BranchJump{d0.breakpoints[j], k});
        }
        shape.branches.push_back(std::move(bi));
    }
    shape.contacts.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
            Rat c;
            bool found = false;
            for (std::size_t j = 0; j < levels && !found; ++j)
                if (point[j][i] != point[j][k]) {
                    c = d0.breakpoints[j];
                    found = true;
                }
            if (!found) throw Error("two branches never separate; not a curve diagram");
            shape.contacts[i][k] = c;
            shape.contacts[k][i] = c;
        }
    return shape;
}

namespace {

// (jump list, sorted contact profile): branches mapped to each other by a
// framed isomorphism must agree on this key.
struct BranchKey {
    std::vector<std::pair<Rat, Int>> jumps;
    std::vector<Rat> profile;

    friend bool operator==(const BranchKey& a, const BranchKey& b) {
        return a.jumps == b.jumps && a.profile == b.profile;
    }
};

BranchKey key_of(const CurveShape& s, std::size_t i) {
    BranchKey k;
    for (const BranchJump& j : s.branches[i].jumps) k.jumps.emplace_back(j.exp, j.k);
    for (std::size_t o = 0; o < s.branches.size(); ++o)
        if (o != i) k.profile.push_back(s.contacts[i][o]);
    std::sort(k.profile.begin(), k.profile.end());
    return k;
}

bool extend(const CurveShape& a, const CurveShape& b,
            const std::vector<std::vector<int>>& candidates, std::vector<int>& image,
            std::vector<char>& used, std::size_t i) {
    if (i == image.size()) return true;
    for (int j : candidates[i]) {
        if (used[static_cast<std::size_t>(j)]) continue;
        bool ok = true;
        for (std::size_t p = 0; p < i && ok; ++p)
            if (a.contacts[i][p] != b.contacts[static_cast<std::size_t>(j)]
                                              [static_cast<std::size_t>(image[p])])
                ok = false;
        if (!ok) continue;
        image[i] = j;
        used[static_cast<std::size_t>(j)] = 1;
        if (extend(a, b, candidates, image, used, i + 1)) return true;
        used[static_cast<std::size_t>(j)] = 0;
    }
    return false;
}

} // namespace

bool compare_framed(const FramedDiagram& a, const FramedDiagram& b) {
    CurveShape sa = analyze_curve_shape(a);
    CurveShape sb = analyze_curve_shape(b);
    if (a.deg0.breakpoints != b.deg0.breakpoints) return false;
    if (a.deg0.ranks != b.deg0.ranks || a.deg1.ranks != b.deg1.ranks) return false;
    const std::size_t n = sa.branches.size();
    if (n != sb.branches.size()) return false;

    std::vector<BranchKey> kb;
    for (std::size_t j = 0; j < n; ++j) kb.push_back(key_of(sb, j));
    std::vector<std::vector<int>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BranchKey ka = key_of(sa, i);
        for (std::size_t j = 0; j < n; ++j)
            if (ka == kb[j]) candidates[i].push_back(static_cast<int>(j));
        if (candidates[i].empty()) return false;
    }
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    return extend(sa, sb, candidates, image, used, 0);
}

} // namespace mdh
