#include "mdh/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "mdh/bdiagram.hpp"
#include "mdh/eggers.hpp"
#include "mdh/error.hpp"
#include "mdh/json_io.hpp"
#include "mdh/mdcurve.hpp"
#include "mdh/oracle.hpp"
#include "mdh/simplicial.hpp"

namespace mdh {

namespace {

std::string matrix_line(const IntMatrix& m) { return matrix_to_json(m).dump(); }

template <typename T>
void print_list(std::ostream& out, const std::string& label, const T& items) {
    out << label << ":";
    for (const auto& v : items) out << " " << v;
    out << "\n";
}

void print_rats(std::ostream& out, const std::string& label, const std::vector<Rat>& items) {
    out << label << ":";
    for (const Rat& v : items) out << " " << rat_to_string(v);
    out << "\n";
}

Curve load_curve(const std::string& path) { return curve_from_json(load_json_file(path)); }

std::string describe(const Curve& c) {
    std::string s;
    for (const PuiseuxSeries& br : c.branches) {
        if (!s.empty()) s += "; ";
        s += br.id + " = " + series_to_string(br);
    }
    return s;
}

void cmd_compute(std::ostream& out, const std::string& path, const std::string& at,
                 const std::string& json_out) {
    const Curve c = load_curve(path);
    const FramedDiagram f = md_diagram(c);
    if (!json_out.empty()) write_text_file(json_out, framed_to_json(f).dump(2) + "\n");

    if (at.empty()) {
        std::vector<std::string> ids;
        for (const PuiseuxSeries& br : c.branches) ids.push_back(br.id);
        print_list(out, "branches", ids);
        print_rats(out, "breakpoints", f.deg0.breakpoints);
        print_list(out, "inf basis", f.inf_basis);
        print_list(out, "one basis", f.one_basis);
        print_rats(out, "jumping rates", jumping_rates(f));
        for (const BDiagram* d : {&f.deg0, &f.deg1}) {
            const std::string deg = "degree " + std::to_string(d->degree);
            print_list(out, deg + " ranks", d->ranks);
            for (std::size_t j = 0; j < d->steps.size(); ++j)
                out << deg << " step at " << rat_to_string(d->breakpoints[j]) << ": "
                    << matrix_line(d->steps[j]) << "\n";
        }
        return;
    }

    const ExtRat b = ExtRat::from_string(at);
    out << "at " << b.str() << "\n";
    out << "degree 0 rank: " << evaluate(f.deg0, b) << "\n";
    out << "degree 1 rank: " << evaluate(f.deg1, b) << "\n";
    const ExtRat inf = ExtRat::infinity(), one(1);
    for (const BDiagram* d : {&f.deg0, &f.deg1})
        out << "degree " << d->degree << " h(inf -> " << b.str()
            << "): " << matrix_line(morphism_matrix(*d, inf, b)) << "\n";
    if (!(b < one))
        for (const BDiagram* d : {&f.deg0, &f.deg1})
            out << "degree " << d->degree << " h(" << b.str()
                << " -> 1): " << matrix_line(morphism_matrix(*d, b, one)) << "\n";
}

void cmd_tree(std::ostream& out, const std::string& path, bool as_json) {
    const EggersWallTree t = build_tree(load_curve(path));
    out << export_tree(t, as_json ? TreeFormat::Json : TreeFormat::Dot);
}

void cmd_jumps(std::ostream& out, const std::string& path) {
    const FramedDiagram f = md_diagram(load_curve(path));
    for (const Rat& b : jumping_rates(f)) out << rat_to_string(b) << "\n";
}

void cmd_compare(std::ostream& out, const std::string& a_path, const std::string& b_path,
                 bool framed) {
    const FramedDiagram a = md_diagram(load_curve(a_path));
    const FramedDiagram b = md_diagram(load_curve(b_path));
    if (framed)
        out << "framed: " << (compare_framed(a, b) ? "true" : "false") << "\n";
    else
        out << verdict_to_string(compare_unframed(a, b)) << "\n";
}

void cmd_multiplicities(std::ostream& out, const std::string& path) {
    const MultiplicityReport rep = relative_multiplicities(load_curve(path));
    for (const TangentMultiplicities& t : rep.tangents) {
        out << t.tangent.id << ": slope " << t.tangent.slope.str() << ", total " << t.total
            << "\n";
        for (const auto& [id, m] : t.branches) out << "  " << id << ": " << m << "\n";
    }
}

int cmd_oracle(std::ostream& out, const std::string& path, unsigned long seed, int random,
               const std::string& json_out) {
    std::vector<std::pair<std::string, CrosscheckReport>> reports;
    if (random > 0) {
        CurveSampler sampler(seed);
        for (int i = 0; i < random; ++i) {
            const Curve c = sampler.random_curve();
            reports.emplace_back(describe(c), crosscheck(c));
        }
    } else {
        const Curve c = load_curve(path);
        reports.emplace_back(describe(c), crosscheck(c));
    }

    int checks = 0, failures = 0;
    Json jreports = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& [label, rep] = reports[i];
        if (random > 0) out << "curve " << i + 1 << ": " << label << "\n";
        Json jchecks = Json::array();
        for (const CheckResult& r : rep.checks) {
            out << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass) out << ": " << r.detail;
            out << "\n";
            jchecks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        checks += static_cast<int>(rep.checks.size());
        failures += rep.failures();
        jreports.push_back({{"curve", label}, {"checks", std::move(jchecks)}});
    }
    out << "checks: " << checks << ", failures: " << failures << "\n";
    if (!json_out.empty()) {
        const Json j = {{"reports", std::move(jreports)}, {"failures", failures}};
        write_text_file(json_out, j.dump(2) + "\n");
    }
    return failures == 0 ? 0 : 2;
}

void print_profile(std::ostream& out, const std::string& when, const HomologyProfile& h) {
    print_list(out, "ranks at " + when, h.ranks);
    out << "torsion at " << when << ":";
    for (const std::vector<Int>& degree : h.torsion) {
        std::string cell;
        for (const Int& f : degree) cell += (cell.empty() ? "" : ",") + f.str();
        out << " " << (cell.empty() ? "-" : cell);
    }
    out << "\n";
}

void cmd_cone(std::ostream& out, const std::string& path, const std::string& b_text) {
    const SimplicialPair p = complex_from_json(load_json_file(path));
    const BConeDiagram d = bcone_diagram(p, rat_from_string(b_text));
    out << "b: " << rat_to_string(d.b) << "\n";
    print_list(out, "ranks below b", d.below_ranks);
    print_profile(out, "b", d.at_b);
    print_profile(out, "inf", d.at_inf);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Moderately discontinuous homology of plane curve germs"};
    app.require_subcommand(1);

    std::string curve_path, at, json_out, a_path, b_path, b_text;
    bool as_dot = false, as_json = false, framed = false;
    unsigned long seed = 1;
    int random = 0;

    CLI::App* compute = app.add_subcommand("compute", "B-indexed diagram of a curve");
    compute->add_option("curve", curve_path, "curve JSON file")->required();
    compute->add_option("--at", at, "evaluation height p/q or inf");
    compute->add_option("--json", json_out, "write the framed diagram JSON to this file");

    CLI::App* tree = app.add_subcommand("tree", "Eggers-Wall tree of a curve");
    tree->add_option("curve", curve_path, "curve JSON file")->required();
    CLI::Option* dot_flag = tree->add_flag("--dot", as_dot, "DOT output (default)");
    tree->add_flag("--json", as_json, "JSON output")->excludes(dot_flag);

    CLI::App* jumps = app.add_subcommand("jumps", "jumping rates of a curve");
    jumps->add_option("curve", curve_path, "curve JSON file")->required();

    CLI::App* compare = app.add_subcommand("compare", "compare two curves");
    compare->add_option("a", a_path, "first curve JSON file")->required();
    compare->add_option("b", b_path, "second curve JSON file")->required();
    compare->add_flag("--framed", framed, "compare framed diagrams");

    CLI::App* mults = app.add_subcommand("multiplicities", "multiplicities along tangent lines");
    mults->add_option("curve", curve_path, "curve JSON file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "cross-check the diagram pipeline");
    oracle->add_option("curve", curve_path, "curve JSON file");
    oracle->add_option("--seed", seed, "sampler seed (with --random)");
    oracle->add_option("--random", random, "check this many sampled curves instead of a file");
    oracle->add_option("--json", json_out, "write the report JSON to this file");

    CLI::App* cone = app.add_subcommand("cone", "homology staircase of a b-cone");
    cone->add_option("complex", curve_path, "complex JSON file")->required();
    cone->add_option("--b", b_text, "cone exponent p/q")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        if (compute->parsed()) {
            cmd_compute(out, curve_path, at, json_out);
        } else if (tree->parsed()) {
            cmd_tree(out, curve_path, as_json);
        } else if (jumps->parsed()) {
            cmd_jumps(out, curve_path);
        } else if (compare->parsed()) {
            cmd_compare(out, a_path, b_path, framed);
        } else if (mults->parsed()) {
            cmd_multiplicities(out, curve_path);
        } else if (oracle->parsed()) {
            if (random <= 0 && curve_path.empty())
                throw Error("oracle needs a curve file or --random");
            return cmd_oracle(out, curve_path, seed, random, json_out);
        } else if (cone->parsed()) {
            cmd_cone(out, curve_path, b_text);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace mdh
