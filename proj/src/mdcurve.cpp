#include "mdh/mdcurve.hpp"

#include <algorithm>

namespace mdh {

namespace {

std::vector<Rat> curve_breakpoints(const EggersWallTree& t) {
    std::vector<Rat> bps = t.interior_heights();
    if (bps.empty() || bps.front() != 1) bps.insert(bps.begin(), Rat(1));
    return bps;
}

// 1 iff the upper slice point feeds the lower one; the slices partition the
// same branch set, so membership of one branch decides inclusion.
bool lies_over(const SlicePoint& lower, const SlicePoint& upper) {
    return std::binary_search(lower.branches.begin(), lower.branches.end(), upper.branches[0]);
}

} // namespace

FramedDiagram md_diagram(const Curve& c) {
    const EggersWallTree t = build_tree(c);
    const std::vector<Rat> bps = curve_breakpoints(t);
    const std::size_t nlevels = bps.size();

    std::vector<LevelSlice> slices;
    for (const Rat& b : bps) slices.push_back(level_slice(t, ExtRat(b)));

    FramedDiagram f;
    f.deg0.degree = 0;
    f.deg1.degree = 1;
    f.deg0.breakpoints = bps;
    f.deg1.breakpoints = bps;
    f.deg0.ranks.push_back(1);
    f.deg1.ranks.push_back(0);
    for (const LevelSlice& s : slices) {
        f.deg0.ranks.push_back(static_cast<int>(s.points.size()));
        f.deg1.ranks.push_back(static_cast<int>(s.points.size()));
    }

    f.deg0.steps.push_back(IntMatrix::ones(1, f.deg0.ranks[1]));
    f.deg1.steps.push_back(IntMatrix(0, f.deg1.ranks[1]));
    for (std::size_t j = 0; j + 1 < nlevels; ++j) {
        const LevelSlice& lo = slices[j];
        const LevelSlice& hi = slices[j + 1];
        IntMatrix m0(static_cast<int>(lo.points.size()), static_cast<int>(hi.points.size()));
        IntMatrix m1 = m0;
        for (std::size_t cc = 0; cc < hi.points.size(); ++cc)
            for (std::size_t r = 0; r < lo.points.size(); ++r) {
                if (!lies_over(lo.points[r], hi.points[cc])) continue;
                const Int& wl = lo.points[r].weight;
                const Int& wh = hi.points[cc].weight;
                if (wh % wl != 0) throw Error("slice weights must divide upwards");
                m0.at(static_cast<int>(r), static_cast<int>(cc)) = 1;
                m1.at(static_cast<int>(r), static_cast<int>(cc)) = wh / wl;
            }
        f.deg0.steps.push_back(std::move(m0));
        f.deg1.steps.push_back(std::move(m1));
    }

    for (const SlicePoint& p : slices.back().points) {
        if (p.branches.size() != 1)
            throw Error("the top slice must separate all branches");
        f.inf_basis.push_back(c.branches[static_cast<std::size_t>(p.branches[0])].id);
    }
    for (std::size_t i = 0; i < slices.front().points.size(); ++i)
        f.one_basis.push_back("T" + std::to_string(i + 1));
    return f;
}

std::vector<TangentLine> tangent_lines(const Curve& c) {
    const EggersWallTree t = build_tree(c);
    const LevelSlice s = level_slice(t, ExtRat(1));
    std::vector<TangentLine> out;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        TangentLine tl;
        tl.id = "T" + std::to_string(i + 1);
        tl.slope = tangent_slope(c.branches[static_cast<std::size_t>(s.points[i].branches[0])]);
        out.push_back(std::move(tl));
    }
    return out;
}

MultiplicityReport relative_multiplicities(const Curve& c) {
    const FramedDiagram f = md_diagram(c);
    const std::vector<TangentLine> tls = tangent_lines(c);
    const IntMatrix m0 = morphism_matrix(f.deg0, ExtRat::infinity(), ExtRat(1));
    const IntMatrix m1 = morphism_matrix(f.deg1, ExtRat::infinity(), ExtRat(1));

    MultiplicityReport rep;
    for (int r = 0; r < m1.rows(); ++r) {
        TangentMultiplicities tm;
        tm.tangent = tls[static_cast<std::size_t>(r)];
        for (int i = 0; i < m1.cols(); ++i)
            if (m0.at(r, i) == 1) {
                tm.branches.emplace_back(f.inf_basis[static_cast<std::size_t>(i)], m1.at(r, i));
                tm.total += m1.at(r, i);
            }
        rep.tangents.push_back(std::move(tm));
    }
    return rep;
}

EggersWallTree reconstruct_tree(const FramedDiagram& f) {
    const CurveShape s = analyze_curve_shape(f);
    return build_tree_from_invariants(s.branches, s.contacts);
}

bool detect_smooth(const FramedDiagram& f) {
    validate_framed(f);
    return f.deg0.breakpoints == std::vector<Rat>{Rat(1)} &&
           f.deg0.ranks == std::vector<int>{1, 1} && f.deg1.ranks == std::vector<int>{0, 1} &&
           f.deg0.steps[0] == IntMatrix::ones(1, 1);
}

} // namespace mdh
