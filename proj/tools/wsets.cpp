#include "wsets/catalog.hpp"
#include "wsets/dimension.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace wsets;
using ordered_json = nlohmann::ordered_json;

constexpr unsigned kDigits = 12;

std::string fold_line(const std::string& name, const FoldReport& rep,
                      const EpsBinding& b) {
    if (rep.failure_reason)
        return name + ": failed (" + *rep.failure_reason + ")";
    return name + ": gap " + format_scalar(rep.gap_measure) + ", overlap " +
           format_scalar(rep.overlap_measure) +
           (rep.exact(b) ? " (exact)" : "");
}

ordered_json fold_json(const FoldReport& rep, const EpsBinding& b) {
    ordered_json j;
    j["gap_measure"] = format_scalar(rep.gap_measure);
    j["overlap_measure"] = format_scalar(rep.overlap_measure);
    j["excess_mass"] = format_scalar(rep.excess_mass);
    j["exact"] = rep.exact(b);
    if (rep.failure_reason) j["failure"] = *rep.failure_reason;
    return j;
}

std::string pairs_text(const std::vector<std::pair<int, BigInt>>& pairs) {
    std::string s;
    for (const auto& [j, k] : pairs) {
        if (!s.empty()) s += ",";
        s += "(" + std::to_string(j) + "," + k.str() + ")";
    }
    return s;
}

void write_csv(const Profile& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "breakpoint_lo,breakpoint_lo_exact,breakpoint_hi,breakpoint_hi_exact,value\n";
    for (size_t i = 0; i < p.values.size(); ++i) {
        const Scalar& lo = p.breakpoints[i];
        const Scalar& hi = p.breakpoints[i + 1];
        out << to_decimal(lo, p.binding, kDigits) << "," << format_scalar(lo) << ","
            << to_decimal(hi, p.binding, kDigits) << "," << format_scalar(hi) << ","
            << p.values[i] << "\n";
    }
}

void write_svg(const Profile& p, const std::string& path) {
    const double width = 800, height = 400, margin = 40;
    long vmax = 1;
    for (long v : p.values) vmax = std::max(vmax, v);
    auto xpix = [&](const Scalar& s) {
        double units = static_cast<double>(s.in_pi_units(p.binding));
        return margin + (units + 1.0) / 2.0 * (width - 2 * margin);
    };
    auto ypix = [&](long v) {
        return height - margin -
               static_cast<double>(v) / static_cast<double>(vmax) * (height - 2 * margin);
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.precision(2);
    out << std::fixed;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << ypix(0) << "\" x2=\""
        << width - margin << "\" y2=\"" << ypix(0) << "\" stroke=\"black\"/>\n";
    out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < p.values.size(); ++i) {
        double y = ypix(p.values[i]);
        out << xpix(p.breakpoints[i]) << "," << y << " "
            << xpix(p.breakpoints[i + 1]) << "," << y << " ";
    }
    out << "\"/>\n</svg>\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact band-limited wavelet-set toolkit"};
    app.require_subcommand(1);

    int n = 0, depth = 0;
    std::string eps_ratio, file, out_path, svg_path, xi_text, which;
    bool as_json = false;

    auto* construct = app.add_subcommand("construct", "Build a depth-J truncation");
    construct->add_option("--n", n)->required();
    construct->add_option("--eps-ratio", eps_ratio, "eps in units of pi")->required();
    construct->add_option("--depth", depth)->required();
    construct->add_option("--out", out_path)->required();

    auto* verify = app.add_subcommand("verify", "Fold a set and report defects");
    verify->add_option("file", file)->required();
    verify->add_flag("--json", as_json);

    auto* dim = app.add_subcommand("dim", "Evaluate the dimension function");
    dim->add_option("file", file)->required();
    dim->add_option("--xi", xi_text, "point, units of pi")->required();

    auto* profile = app.add_subcommand("profile", "Exact profile on [-pi, pi)");
    profile->add_option("file", file)->required();
    profile->add_option("--out", out_path)->required();
    profile->add_option("--svg", svg_path);

    auto* witness = app.add_subcommand("witness", "Check the dimension witness point");
    witness->add_option("--n", n)->required();
    witness->add_option("--eps-ratio", eps_ratio)->required();

    auto* identities = app.add_subcommand("identities", "Check construction identities");
    identities->add_option("--n", n)->required();
    identities->add_option("--eps-ratio", eps_ratio)->required();
    identities->add_option("--depth", depth)->default_val(4);

    auto* catalog_cmd = app.add_subcommand("catalog", "Write a reference set");
    catalog_cmd->add_option("name", which)->required()
        ->check(CLI::IsMember({"shannon", "journe"}));
    catalog_cmd->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (construct->parsed()) {
        Params p(n, EpsBinding(parse_rational(eps_ratio)));
        TruncatedSet t = truncate(p, depth);
        TruncationHeader h{n, depth, t.excess_measure};
        save(t.set, out_path, h);
        std::cout << "excess: " << format_scalar(t.excess_measure) << "\n";
        std::cout << "missing: " << format_scalar(t.missing_measure) << "\n";
        return 0;
    }
    if (verify->parsed()) {
        Document doc = load(file);
        const EpsBinding& b = doc.set.binding();
        Verdict v = wavelet_verdict(doc.set);
        if (as_json) {
            ordered_json j;
            j["translation"] = fold_json(v.translation, b);
            j["dilation_pos"] = fold_json(v.dilation_pos, b);
            j["dilation_neg"] = fold_json(v.dilation_neg, b);
            j["is_wavelet_set"] = v.is_wavelet_set;
            std::cout << j.dump(2) << "\n";
        } else {
            if (doc.non_canonical)
                std::cerr << "note: input was not canonical; re-normalized\n";
            std::cout << fold_line("translation", v.translation, b) << "\n";
            std::cout << fold_line("dilation+", v.dilation_pos, b) << "\n";
            std::cout << fold_line("dilation-", v.dilation_neg, b) << "\n";
            std::cout << "wavelet set: " << (v.is_wavelet_set ? "yes" : "no") << "\n";
        }
        return v.is_wavelet_set ? 0 : 1;
    }
    if (dim->parsed()) {
        Document doc = load(file);
        Scalar xi = parse_scalar(xi_text);
        SetOracle o = oracle_for(doc.set);
        auto pairs = dimension_pairs(o, xi);
        std::cout << "pairs: " << pairs_text(pairs) << "\n";
        std::cout << "dim: " << pairs.size() << "\n";
        return 0;
    }
    if (profile->parsed()) {
        Document doc = load(file);
        Profile p = dimension_profile(doc.set);
        write_csv(p, out_path);
        if (!svg_path.empty()) write_svg(p, svg_path);
        ProfileStats st = profile_stats(p);
        std::cout << "max: " << st.max << "\n";
        std::cout << "integral: " << format_scalar(st.integral) << "\n";
        return 0;
    }
    if (witness->parsed()) {
        Params p(n, EpsBinding(parse_rational(eps_ratio)));
        WitnessReport rep = check_witness(p);
        std::cout << "xi: " << format_scalar(rep.xi_sample) << "\n";
        std::cout << "pairs: " << pairs_text(rep.pairs) << "\n";
        std::cout << "dim: " << rep.dim << "\n";
        std::cout << "ok: " << (rep.ok ? "yes" : "no") << "\n";
        return rep.ok ? 0 : 1;
    }
    if (identities->parsed()) {
        Params p(n, EpsBinding(parse_rational(eps_ratio)));
        IdentityReport rep = verify_paper_identities(p, depth);
        for (const IdentityCheck& c : rep.checks) {
            std::cout << (c.holds ? "pass " : "FAIL ") << c.name;
            if (!c.note.empty()) std::cout << "  " << c.note;
            std::cout << "\n";
        }
        std::cout << "all: " << (rep.all_pass ? "yes" : "no") << "\n";
        return rep.all_pass ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
        save(which == "shannon" ? shannon() : journe(), out_path);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const EpsOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VersionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
