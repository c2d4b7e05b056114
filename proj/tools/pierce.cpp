// Command-line front end: generate the unpierceable family, check
// (p,q)-properties, solve piercing numbers, compute escape certificates, run
// the clip-and-pierce pipeline, and render families as SVG.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pierce/pierce.hpp"

namespace {

using namespace pierce;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::parse_error:
        case Errc::duplicate_label:
        case Errc::bad_params:
        case Errc::bad_sequence:
        case Errc::invalid_input:
            return 2;
        case Errc::hypothesis_violated:
            return 3;
        default:
            return 1; // failed check or domain error, certificate on stderr
    }
}

Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open '" + path + "'");
    return parse_family(in);
}

std::vector<Point> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open '" + path + "'");
    return parse_points(in);
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
    return out;
}

int cmd_gen(int n, const std::string& table_path, const std::string& out_path) {
    SequenceConfig cfg = SequenceConfig::defaults();
    if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in) throw Error(Errc::invalid_input, "cannot open '" + table_path + "'");
        cfg = parse_sequence_table(in);
    }
    const Family fam = generate(n, cfg);
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::invalid_input, "cannot open '" + out_path + "' for writing");
    serialize_family(fam, out);
    std::cout << "family: " << fam.name << "\n";
    std::cout << "regions: " << fam.regions.size() << "\n";
    std::cout << "out: " << out_path << "\n";
    return 0;
}

int cmd_check_pq(const std::string& path, int p, int q) {
    const Family fam = load_family(path);
    const PqReport rep = has_pq_property(fam, p, q);
    std::cout << "family: " << fam.name << "\n";
    std::cout << "p: " << p << "\nq: " << q << "\n";
    std::cout << "holds: " << (rep.holds ? "true" : "false") << "\n";
    std::cout << "q-subsets-checked: " << rep.witness_table.size() << "\n";
    if (rep.holds) return 0;
    std::cout << "violation: " << join(*rep.violation) << "\n";
    for (const auto& [labels, witness] : rep.witness_table) {
        bool in_violation = true;
        for (const auto& l : labels)
            if (std::find(rep.violation->begin(), rep.violation->end(), l) ==
                rep.violation->end())
                in_violation = false;
        if (in_violation && !witness) std::cout << "empty: " << join(labels) << "\n";
    }
    return 1;
}

int cmd_pierce(const std::string& path, int max_size) {
    const Family fam = load_family(path);
    const PiercingResult res =
        piercing_number(fam, max_size > 0 ? std::optional<int>(max_size) : std::nullopt);
    std::cout << "family: " << fam.name << "\n";
    std::cout << "tau: " << res.tau << "\n";
    std::cout << "optimal: " << (res.optimal ? "true" : "false") << "\n";
    std::cout << "explored-nodes: " << res.explored_nodes << "\n";
    for (const Point& p : res.transversal)
        std::cout << "point: " << to_string(p.x) << " " << to_string(p.y) << "\n";
    const auto [ok, missed] = verify_transversal(fam, res.transversal);
    std::cout << "verified: " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int cmd_escape(const std::string& x, const std::string& y) {
    const Point p{parse_rational(x), parse_rational(y)};
    const EscapeTrace tr = escape_index(p, SequenceConfig::defaults());
    std::cout << "point: " << to_string(p) << "\n";
    if (tr.n0) std::cout << "n0: " << *tr.n0 << "\n";
    if (tr.slope_s) std::cout << "slope: " << to_string(*tr.slope_s) << "\n";
    if (tr.m0) std::cout << "m0: " << *tr.m0 << "\n";
    std::cout << "escapeIndex: " << tr.escape_index << "\n";
    return 0;
}

int cmd_certify(const std::string& points_path) {
    const std::vector<Point> pts = load_points(points_path);
    const UnpierceabilityCertificate cert =
        unpierceability_certificate(pts, SequenceConfig::defaults());
    for (const EscapeTrace& tr : cert.traces)
        std::cout << "escape: " << to_string(tr.point) << " -> " << tr.escape_index << "\n";
    std::cout << "n-star: " << cert.n_star << "\n";
    std::cout << "certified: F" << cert.n_star << " avoids all " << pts.size() << " points\n";
    return 0;
}

int cmd_theorem2(const std::string& path, const std::string& a, const std::string& b) {
    const Family fam = load_family(path);
    const Theorem2Report rep = run_theorem2(fam, a, b);
    std::cout << "family: " << fam.name << "\n";
    std::cout << "a: " << rep.a_label << "\nb: " << rep.b_label << "\n";
    std::cout << "pq-holds: " << (rep.pq_holds ? "true" : "false") << "\n";
    std::cout << "f0-constraints: " << rep.f0.constraints.size() << "\n";
    std::cout << "obs1: " << (rep.obs1_ok ? "ok" : "failed") << "\n";
    if (!rep.obs1_ok) {
        std::cout << "obs1-offending: " << *rep.obs1_offending << "\n";
        if (rep.obs1_quadruple)
            std::cout << "obs1-quadruple: " << (*rep.obs1_quadruple)[0] << " "
                      << (*rep.obs1_quadruple)[1] << " " << (*rep.obs1_quadruple)[2] << " "
                      << (*rep.obs1_quadruple)[3] << "\n";
        return 1;
    }
    std::cout << "obs2: " << (rep.obs2_ok ? "ok" : "failed") << "\n";
    if (!rep.obs2_ok) {
        std::cout << "obs2-offending: " << (*rep.obs2_offending)[0] << " "
                  << (*rep.obs2_offending)[1] << " " << (*rep.obs2_offending)[2] << "\n";
        return 1;
    }
    std::cout << "clipped-bounded: " << (rep.all_clipped_bounded ? "true" : "false") << "\n";
    std::cout << "clipped-pq-holds: " << (rep.clipped_pq_holds ? "true" : "false") << "\n";
    std::cout << "tau: " << rep.piercing->tau << "\n";
    for (const Point& p : rep.piercing->transversal)
        std::cout << "point: " << to_string(p.x) << " " << to_string(p.y) << "\n";
    std::cout << "bound: " << rep.bound << "\n";
    std::cout << "bound-satisfied: " << (rep.bound_satisfied ? "true" : "false") << "\n";
    std::cout << "pierces-original: " << (rep.pierces_original ? "true" : "false") << "\n";
    return (rep.bound_satisfied && rep.pierces_original) ? 0 : 1;
}

int cmd_radon(const std::vector<std::string>& coords) {
    std::array<Point, 4> pts;
    for (std::size_t i = 0; i < 4; ++i)
        pts[i] = Point{parse_rational(coords[2 * i]), parse_rational(coords[2 * i + 1])};
    const RadonPartition rp = radon_partition(pts);
    auto print_part = [](const char* name, const std::vector<int>& part) {
        std::cout << name << ":";
        for (int i : part) std::cout << " " << i;
        std::cout << "\n";
    };
    print_part("partA", rp.part_a);
    print_part("partB", rp.part_b);
    std::cout << "common: " << to_string(rp.common_point) << "\n";
    return 0;
}

int cmd_render(const std::string& path, const std::string& out_path,
               const std::vector<std::string>& clip) {
    const Family fam = load_family(path);
    Rational x0(-2), y0(-3), x1(3), y1(4); // default viewport
    if (!clip.empty()) {
        x0 = parse_rational(clip[0]);
        y0 = parse_rational(clip[1]);
        x1 = parse_rational(clip[2]);
        y1 = parse_rational(clip[3]);
    }
    std::ofstream out(out_path);
    if (!out) throw Error(Errc::invalid_input, "cannot open '" + out_path + "' for writing");
    render_svg(fam, out, x0, y0, x1, y1);
    std::cout << "rendered: " << fam.regions.size() << " regions\n";
    std::cout << "out: " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact planar convex-family piercing toolkit"};
    app.require_subcommand(1);

    int gen_n = 0;
    std::string gen_table, gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate the unpierceable family prefix F1..FN");
    gen_cmd->add_option("--n", gen_n, "number of regions")->required();
    gen_cmd->add_option("--table", gen_table, "sequence table file (t s per line, from n=3)");
    gen_cmd->add_option("--out", gen_out, "output family file")->required();

    std::string pq_file;
    int pq_p = 0, pq_q = 0;
    auto* pq_cmd = app.add_subcommand("check-pq", "check the (p,q)-property");
    pq_cmd->add_option("--p", pq_p, "p")->required();
    pq_cmd->add_option("--q", pq_q, "q")->required();
    pq_cmd->add_option("file", pq_file, "family file")->required();

    std::string pierce_file;
    int pierce_max = 0;
    auto* pierce_cmd = app.add_subcommand("pierce", "exact minimum transversal");
    pierce_cmd->add_option("file", pierce_file, "family file")->required();
    pierce_cmd->add_option("--max-size", pierce_max, "fail if no transversal of this size");

    std::string esc_x, esc_y;
    auto* esc_cmd = app.add_subcommand("escape", "escape index of a point (default sequences)");
    esc_cmd->add_option("--x", esc_x, "x coordinate (rational)")->required();
    esc_cmd->add_option("--y", esc_y, "y coordinate (rational)")->required();

    std::string cert_points;
    auto* cert_cmd =
        app.add_subcommand("certify-unpierceable", "tail region avoiding a finite point set");
    cert_cmd->add_option("--points", cert_points, "points file (x y per line)")->required();

    std::string t2_file, t2_a, t2_b;
    auto* t2_cmd = app.add_subcommand("theorem2", "clip by conv(A u B) and pierce");
    t2_cmd->add_option("file", t2_file, "family file")->required();
    t2_cmd->add_option("--a", t2_a, "label of compactum A")->required();
    t2_cmd->add_option("--b", t2_b, "label of compactum B")->required();

    std::vector<std::string> radon_coords;
    auto* radon_cmd = app.add_subcommand("radon", "Radon partition of four points");
    radon_cmd->add_option("coords", radon_coords, "X1 Y1 X2 Y2 X3 Y3 X4 Y4")
        ->expected(8)
        ->required();

    std::string render_file, render_out;
    std::vector<std::string> render_clip;
    auto* render_cmd = app.add_subcommand("render", "draw the family as SVG");
    render_cmd->add_option("file", render_file, "family file")->required();
    render_cmd->add_option("--out", render_out, "output SVG file")->required();
    render_cmd->add_option("--clip-box", render_clip, "X0 Y0 X1 Y1")->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen_n, gen_table, gen_out);
        if (*pq_cmd) return cmd_check_pq(pq_file, pq_p, pq_q);
        if (*pierce_cmd) return cmd_pierce(pierce_file, pierce_max);
        if (*esc_cmd) return cmd_escape(esc_x, esc_y);
        if (*cert_cmd) return cmd_certify(cert_points);
        if (*t2_cmd) return cmd_theorem2(t2_file, t2_a, t2_b);
        if (*radon_cmd) return cmd_radon(radon_coords);
        if (*render_cmd) return cmd_render(render_file, render_out, render_clip);
    } catch (const pierce::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
