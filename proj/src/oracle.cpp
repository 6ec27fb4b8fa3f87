#include "mdh/oracle.hpp"

#include <algorithm>
#include <map>

#include "mdh/bdiagram.hpp"
#include "mdh/eggers.hpp"
#include "mdh/error.hpp"
#include "mdh/json_io.hpp"
#include "mdh/mdcurve.hpp"
#include "mdh/simplicial.hpp"

namespace mdh {

namespace {

std::vector<PuiseuxTerm> truncate_terms(const PuiseuxSeries& s, const Rat& b) {
    std::vector<PuiseuxTerm> out;
    for (const PuiseuxTerm& t : s.terms)
        if (t.exp <= b) out.push_back(t);
    return out;
}

} // namespace

std::vector<TruncationClass> truncation_components(const Curve& c, const Rat& b) {
    if (b < 1) throw Error("truncation heights start at 1");
    validate_curve(c);
    const int n = static_cast<int>(c.branches.size());

    std::vector<std::vector<PuiseuxTerm>> trunc;
    for (const PuiseuxSeries& s : c.branches) trunc.push_back(truncate_terms(s, b));

    // group branches with termwise identical truncations, scanning in input
    // order so members stay input-ordered
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (std::vector<int>& g : groups)
            if (trunc[static_cast<std::size_t>(g[0])] == trunc[static_cast<std::size_t>(i)]) {
                g.push_back(i);
                placed = true;
                break;
            }
        if (!placed) groups.push_back({i});
    }

    // slice order, reconstructed from raw contacts alone: two classes part
    // ways at their cross contact c*, and the side holding the smallest
    // input index comes first
    auto side_key = [&](int rep, const Rat& cstar) {
        for (int j = 0; j < n; ++j)
            if (j == rep || contact(c.branches[static_cast<std::size_t>(rep)],
                                    c.branches[static_cast<std::size_t>(j)]) > ExtRat(cstar))
                return j;
        return rep;
    };
    std::sort(groups.begin(), groups.end(),
              [&](const std::vector<int>& ga, const std::vector<int>& gb) {
                  const ExtRat cross = contact(c.branches[static_cast<std::size_t>(ga[0])],
                                               c.branches[static_cast<std::size_t>(gb[0])]);
                  const Rat cstar = cross.finite();
                  return side_key(ga[0], cstar) < side_key(gb[0], cstar);
              });

    std::vector<TruncationClass> out;
    for (const std::vector<int>& g : groups) {
        TruncationClass tc;
        tc.representative.id = c.branches[static_cast<std::size_t>(g[0])].id;
        tc.representative.terms = trunc[static_cast<std::size_t>(g[0])];
        for (int i : g) tc.members.push_back(c.branches[static_cast<std::size_t>(i)].id);
        tc.kappa = multiplicity(tc.representative);
        out.push_back(std::move(tc));
    }
    return out;
}

CircleCover circle_cover(const Curve& c, const Rat& b1, const Rat& b2) {
    if (b2 < 1 || b1 < b2) throw Error("cover heights must satisfy b1 >= b2 >= 1");
    const std::vector<TruncationClass> upper = truncation_components(c, b1);
    const std::vector<TruncationClass> base = truncation_components(c, b2);

    // each upper class refines exactly one base class; the shared slice
    // order must keep refining classes contiguous over their base
    CircleCover cov;
    cov.sheets.resize(base.size());
    std::size_t at = 0;
    for (const TruncationClass& u : upper) {
        while (at < base.size() &&
               std::find(base[at].members.begin(), base[at].members.end(), u.members[0]) ==
                   base[at].members.end())
            ++at;
        if (at == base.size()) throw Error("internal: cover sheets out of slice order");
        if (u.kappa % base[at].kappa != 0)
            throw Error("internal: sheet multiplicity does not divide upwards");
        cov.sheets[at].push_back(u.kappa / base[at].kappa);
    }
    for (const std::vector<Int>& s : cov.sheets)
        if (s.empty()) throw Error("internal: base circle with no sheet");
    return cov;
}

std::pair<IntMatrix, IntMatrix> covering_maps(const Curve& c, const Rat& b1, const Rat& b2) {
    const CircleCover cov = circle_cover(c, b1, b2);

    std::vector<std::vector<int>> base_edges;
    for (std::size_t i = 0; i < cov.sheets.size(); ++i) {
        const int o = 3 * static_cast<int>(i);
        base_edges.push_back({o, o + 1});
        base_edges.push_back({o + 1, o + 2});
        base_edges.push_back({o, o + 2});
    }

    std::vector<std::vector<int>> dom_edges;
    std::vector<int> img;
    int offset = 0;
    for (std::size_t i = 0; i < cov.sheets.size(); ++i)
        for (const Int& deg : cov.sheets[i]) {
            if (deg > 100000) throw Error("covering degree too large to realize");
            const int nv = 3 * deg.convert_to<int>();
            for (int t = 0; t + 1 < nv; ++t) dom_edges.push_back({offset + t, offset + t + 1});
            dom_edges.push_back({offset, offset + nv - 1});
            for (int t = 0; t < nv; ++t) img.push_back(3 * static_cast<int>(i) + t % 3);
            offset += nv;
        }

    return induced_maps_deg01(make_complex(std::move(dom_edges)),
                              make_complex(std::move(base_edges)), img);
}

bool CrosscheckReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

int CrosscheckReport::failures() const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (!c.pass) ++n;
    return n;
}

CrosscheckReport crosscheck(const Curve& c) {
    CrosscheckReport rep;
    auto add = [&rep](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
    };

    try {
        validate_curve(c);
        const FramedDiagram f = md_diagram(c);
        const EggersWallTree t = build_tree(c);

        // one probe at every breakpoint and one inside every interval
        std::vector<Rat> probes;
        const std::vector<Rat>& bps = f.deg0.breakpoints;
        for (std::size_t j = 0; j < bps.size(); ++j) {
            probes.push_back(bps[j]);
            probes.push_back(j + 1 < bps.size() ? Rat((bps[j] + bps[j + 1]) / 2)
                                                : Rat(bps[j] + 1));
        }

        for (const Rat& b : probes) {
            const std::vector<TruncationClass> classes = truncation_components(c, b);
            const LevelSlice slice = level_slice(t, ExtRat(b));
            const int rank = evaluate(f.deg0, ExtRat(b));
            const std::string at = "@" + rat_to_string(b);

            const bool counts = static_cast<int>(classes.size()) == rank &&
                                classes.size() == slice.points.size();
            add("count" + at, counts,
                "classes=" + std::to_string(classes.size()) +
                    " slice=" + std::to_string(slice.points.size()) +
                    " rank=" + std::to_string(rank));
            if (!counts) {
                add("kappa" + at, false, "class count mismatch");
                add("members" + at, false, "class count mismatch");
                continue;
            }

            bool kappas = true, members = true;
            std::string kd, md;
            for (std::size_t p = 0; p < classes.size(); ++p) {
                if (classes[p].kappa != slice.points[p].weight) {
                    kappas = false;
                    kd += " [" + std::to_string(p) + "] class=" + classes[p].kappa.str() +
                          " slice=" + slice.points[p].weight.str();
                }
                std::vector<std::string> ids;
                for (int idx : slice.points[p].branches)
                    ids.push_back(t.branch_ids[static_cast<std::size_t>(idx)]);
                if (classes[p].members != ids) {
                    members = false;
                    md += " [" + std::to_string(p) + "]";
                }
            }
            add("kappa" + at, kappas, kd);
            add("members" + at, members, md);
        }

        for (std::size_t u = 0; u < probes.size(); ++u)
            for (std::size_t l = 0; l <= u; ++l) {
                const auto [m0, m1] = covering_maps(c, probes[u], probes[l]);
                const IntMatrix d0 = morphism_matrix(f.deg0, ExtRat(probes[u]), ExtRat(probes[l]));
                const IntMatrix d1 = morphism_matrix(f.deg1, ExtRat(probes[u]), ExtRat(probes[l]));
                const bool ok = m0 == d0 && m1 == d1;
                std::string detail;
                if (!ok)
                    detail = "cover0=" + matrix_to_json(m0).dump() +
                             " diagram0=" + matrix_to_json(d0).dump() +
                             " cover1=" + matrix_to_json(m1).dump() +
                             " diagram1=" + matrix_to_json(d1).dump();
                add("maps@(" + rat_to_string(probes[u]) + "," + rat_to_string(probes[l]) + ")", ok,
                    std::move(detail));
            }
    } catch (const Error& e) {
        add("exception", false, e.what());
    }
    return rep;
}

CurveSampler::CurveSampler(unsigned long seed) : rng_(seed) {}

long CurveSampler::pick(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
}

GaussRat CurveSampler::random_coeff() {
    const long r = pick(0, 9);
    const long sign = pick(0, 1) ? 1 : -1;
    if (r < 6) return GaussRat(sign * pick(1, 3));
    if (r < 8) return GaussRat(Rat(sign * pick(1, 3), pick(1, 2)));
    if (r == 8) return GaussRat(Rat(0), Rat(sign * pick(1, 2)));
    return GaussRat(Rat(pick(1, 2)), Rat(sign));
}

void CurveSampler::extend_tail(std::vector<PuiseuxTerm>& terms, Int den, Rat last) {
    while (true) {
        std::vector<long> ks;
        for (long k = 2; k <= 8; ++k)
            if (den * k <= 8) ks.push_back(k);
        if (ks.empty() || pick(0, 2) == 0) break;
        const long k = ks[static_cast<std::size_t>(pick(0, static_cast<long>(ks.size()) - 1))];
        const Int nden = den * k;

        // a fresh characteristic exponent: denominator exactly nden, in (last, 6]
        std::vector<Int> nums;
        for (Int m = rat_num(last) * nden / rat_den(last) + 1; m <= 6 * nden; ++m)
            if (gcd(m, nden) == 1 && Rat(m, nden) > last) nums.push_back(m);
        if (nums.empty()) break;
        const Rat e(nums[static_cast<std::size_t>(pick(0, static_cast<long>(nums.size()) - 1))],
                    nden);
        terms.push_back({e, random_coeff()});
        den = nden;
        last = e;

        // sometimes a follower that keeps the denominator, to decouple
        // characteristic exponents from plain term positions
        if (pick(0, 2) == 0 && last + Rat(1, den) <= 6) {
            last += Rat(1, den);
            terms.push_back({last, random_coeff()});
        }
    }
}

PuiseuxSeries CurveSampler::random_branch(const std::string& id) {
    PuiseuxSeries s;
    s.id = id;
    Rat last = 1;
    if (pick(0, 1)) s.terms.push_back({Rat(1), random_coeff()});
    if (pick(0, 2) == 0) {
        last = 2;
        s.terms.push_back({last, random_coeff()});
    }
    extend_tail(s.terms, 1, last);
    if (s.terms.empty()) s.terms.push_back({Rat(pick(1, 3)), random_coeff()});
    return s;
}

Curve CurveSampler::random_irreducible() {
    Curve c;
    c.branches.push_back(random_branch("B1"));
    return c;
}

Curve CurveSampler::random_curve() {
    const long n = pick(1, 6);
    Curve c;
    for (long i = 0; i < n; ++i) {
        const std::string id = "B" + std::to_string(i + 1);
        PuiseuxSeries s;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw Error("sampler failed to produce distinct branches");
            if (i == 0 || pick(0, 4) == 0) {
                s = random_branch(id);
            } else {
                // clone a prefix of an earlier branch, then part ways: a
                // changed coefficient at the cut and/or a fresh tail
                const PuiseuxSeries& base =
                    c.branches[static_cast<std::size_t>(pick(0, i - 1))];
                s = PuiseuxSeries{id, {}};
                const long cut = pick(0, static_cast<long>(base.terms.size()));
                s.terms.assign(base.terms.begin(), base.terms.begin() + cut);
                Int den = 1;
                Rat last = 1;
                for (const PuiseuxTerm& t : s.terms) {
                    den = lcm(den, rat_den(t.exp));
                    if (t.exp > last) last = t.exp;
                }
                if (cut < static_cast<long>(base.terms.size()) && pick(0, 1)) {
                    const PuiseuxTerm& bt = base.terms[static_cast<std::size_t>(cut)];
                    GaussRat nc;
                    do {
                        nc = random_coeff();
                    } while (nc == bt.coeff);
                    s.terms.push_back({bt.exp, nc});
                    den = lcm(den, rat_den(bt.exp));
                    last = bt.exp;
                }
                extend_tail(s.terms, den, last);
            }
            bool dup = false;
            for (const PuiseuxSeries& other : c.branches)
                if (other.terms == s.terms) dup = true;
            if (!dup) break;
        }
        c.branches.push_back(std::move(s));
    }
    validate_curve(c);
    return c;
}

} // namespace mdh
