// nt: command-line front end for Newton trees, zeta functions and the lct/multiplicity invariants.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "nt/cli.hpp"
#include "nt/errors.hpp"
#include "nt/invariants.hpp"

namespace {

using namespace nt;

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::NonRationalRoot: return 3;
    case ErrorKind::NotFiniteCodimension: return 4;
    case ErrorKind::UnitIdeal:
    case ErrorKind::EmptyIdeal: return 5;
    case ErrorKind::Internal:
    case ErrorKind::CertificateFailed: return 64;
    default: return 1;
    }
}

Ideal read_ideal(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_ideal(text);
}

std::string site_name(LctWitness::Site s) {
    switch (s) {
    case LctWitness::Site::Face: return "face";
    case LctWitness::Site::XComponent: return "x-component";
    case LctWitness::Site::YComponent: return "y-component";
    case LctWitness::Site::Leaf: return "leaf";
    }
    return "?";
}

std::string path_text(const std::vector<std::size_t>& path) {
    std::string s = "root";
    for (auto i : path) s += "/" + std::to_string(i);
    return s;
}

void print_lct(const Ideal& I, bool certificate) {
    LctWitness w = lct(I);
    std::cout << "lct " << w.value << "\n";
    std::cout << "attained at " << site_name(w.site) << " " << path_text(w.path);
    if (w.site == LctWitness::Site::Face) std::cout << " face " << w.face;
    std::cout << " (p,q,nu,N) = (" << w.p << "," << w.q << "," << w.nuStage << "," << w.N << ")\n";
    if (!certificate) return;
    LctCertificate c = lct_certificate(I);
    for (const auto& s : c.changes)
        std::cout << "exchange at vertex " << s.vertex << " edge " << s.edge
                  << (s.side == ExchangeSide::Below ? " below" : " above") << ": n0*m0 = " << s.n0 * s.m0
                  << " >= N0 = " << s.N0 << "\n";
    std::cout << "attained on first line: " << (c.attainedOnFirstLine ? "yes" : "no") << "\n";
    std::cout << "diagonal face " << c.diagonalFace.p << "a+" << c.diagonalFace.q << "b=" << c.diagonalFace.N << "\n";
}

void print_report(const Ideal& I) {
    InequalityReport r = inequality_report(I);
    std::cout << "e " << r.e << "\n";
    std::cout << "lct " << r.lct << "\n";
    std::cout << "bound1 " << r.bound1 << " (" << r.bound1.get_d() << ")\n";
    std::cout << "bound2 " << r.bound2 << " (" << r.bound2.get_d() << ")";
    if (!r.lctOnFirstDiagram) std::cout << " [coordinates do not read the lct off the first diagram]";
    std::cout << "\n";
    std::cout << "equality shape " << (r.equalityShape ? "yes" : "no") << "\n";
}

void print_coords(const Ideal& I) {
    if (!depth_zero_form(I)) {
        CoordinateStatus st = coordinate_status(I);
        std::cout << "good " << (st.good ? "yes" : "no") << ", very good " << (st.veryGood ? "yes" : "no") << "\n";
        if (st.witness)
            std::cout << "witness face " << st.witness->p << "a+" << st.witness->q << "b=" << st.witness->N << "\n";
    }
    ImprovedCoordinates ic = improve_coordinates(I);
    for (const auto& ch : ic.changes) std::cout << "change: " << ch.description << "\n";
    std::cout << "ideal " << render(ic.ideal) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton algorithm for ideals in two variables"};
    app.require_subcommand(1);
    std::string file, format = "ascii";
    bool minimal = false, certificate = false;
    std::uint32_t nu = 1;

    auto* tree = app.add_subcommand("tree", "Newton tree of the ideal");
    tree->add_option("FILE", file, "ideal file, - for stdin")->required();
    tree->add_flag("--minimal", minimal, "minimise by exchanges and erasures");
    tree->add_option("--format", format, "ascii, json or dot");

    auto* zeta_cmd = app.add_subcommand("zeta", "motivic zeta function for the form x^(nu-1) dx^dy");
    zeta_cmd->add_option("FILE", file, "ideal file, - for stdin")->required();
    zeta_cmd->add_option("--nu", nu, "form exponent")->check(CLI::PositiveNumber);
    zeta_cmd->add_option("--format", format, "ascii, json or latex");

    auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
    lct_cmd->add_option("FILE", file, "ideal file, - for stdin")->required();
    lct_cmd->add_flag("--certificate", certificate, "print the exchange certificate");

    auto* mult = app.add_subcommand("mult", "Hilbert-Samuel multiplicity");
    mult->add_option("FILE", file, "ideal file, - for stdin")->required();
    auto* depth_cmd = app.add_subcommand("depth", "depth of the Newton algorithm");
    depth_cmd->add_option("FILE", file, "ideal file, - for stdin")->required();
    auto* report = app.add_subcommand("report", "multiplicity and lct inequalities");
    report->add_option("FILE", file, "ideal file, - for stdin")->required();
    auto* coords = app.add_subcommand("coords", "coordinate status and improvement log");
    coords->add_option("FILE", file, "ideal file, - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const Ideal I = read_ideal(file);
        if (tree->parsed()) {
            NewtonTree t = build_tree(I);
            if (minimal) t = minimize(t).tree;
            std::cout << render(t, parse_format(format)) << "\n";
        } else if (zeta_cmd->parsed()) {
            std::cout << render(zeta(I, nu), parse_format(format)) << "\n";
        } else if (lct_cmd->parsed()) {
            print_lct(I, certificate);
        } else if (mult->parsed()) {
            std::cout << multiplicity(I) << "\n";
        } else if (depth_cmd->parsed()) {
            std::cout << "depth " << depth(I) << "\n";
            std::cout << "geometric depth estimate " << geometric_depth_estimate(build_tree(I)) << "\n";
        } else if (report->parsed()) {
            print_report(I);
        } else if (coords->parsed()) {
            print_coords(I);
        }
    } catch (const Error& e) {
        std::cerr << "nt: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "nt: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
