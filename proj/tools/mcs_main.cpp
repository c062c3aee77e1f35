// Command-line surface: subdivision construction, vector transforms, descent
// tables, gamma vectors, real-rootedness certificates and the verification
// suites. JSON to stdout by default, CSV via --format csv. Exit codes:
// 0 success/pass, 1 verification failure, 2 usage or input error.

#include "mcs/mcs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mcs::BigInt;
using mcs::json;

void emit(const json& j, const std::string& format)
{
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // csv: flatten arrays one row per line, scalars as key,value
    if (j.is_array()) {
        for (const auto& row : j) {
            if (row.is_array()) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << (row[i].is_string()
                                                        ? row[i].get<std::string>()
                                                        : row[i].dump());
                std::cout << "\n";
            } else {
                std::cout << (row.is_string() ? row.get<std::string>() : row.dump()) << "\n";
            }
        }
        return;
    }
    for (const auto& [k, v] : j.items())
        std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

std::vector<BigInt> parse_csv_bigints(const std::string& s)
{
    std::vector<BigInt> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.emplace_back(item);
    return out;
}

std::vector<int> parse_csv_ints(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

// --apply accepts either a complex object (f/h computed from it) or a bare
// JSON array of integers
std::vector<BigInt> load_vector(const std::string& path, const std::string& kind)
{
    std::ifstream in(path);
    if (!in)
        throw mcs::Error("cannot open file: " + path);
    json j;
    in >> j;
    if (j.is_array()) {
        std::vector<BigInt> v;
        for (const auto& x : j)
            v.push_back(mcs::bigint_from_json(x));
        return v;
    }
    mcs::SimplicialComplex sc = mcs::complex_from_json(j);
    if (kind == "f")
        return sc.f_vector();
    return mcs::f_to_h(sc.f_vector());
}

int run_subdivide(const std::string& path, const std::string& method, int r, bool has_r, int N,
                  bool has_n, const std::string& iota_csv, const std::string& format)
{
    mcs::SimplicialComplex sc = mcs::load_complex(path);
    auto need_r = [&]() {
        if (!has_r)
            throw CLI::ValidationError("--r is required for --method " + method);
        return r;
    };
    mcs::SimplicialComplex out;
    if (method == "barycentric") {
        out = mcs::barycentric(sc);
    } else if (method == "edgewise") {
        out = mcs::edgewise(sc, need_r()).complex;
    } else if (method == "colored") {
        out = mcs::colored_barycentric(sc, need_r());
    } else if (method == "cms") {
        if (!has_n)
            throw CLI::ValidationError("--N is required for --method cms");
        out = mcs::cms(sc, N).complex;
    } else if (method == "type1") {
        out = mcs::type_I(sc, need_r());
    } else if (method == "type2") {
        out = mcs::type_II(sc, need_r());
    } else if (method == "multichain") {
        if (iota_csv.empty())
            throw CLI::ValidationError("--iota is required for --method multichain");
        mcs::IncreasingMap iota{parse_csv_ints(iota_csv)};
        out = mcs::multichain_subdivision(sc, iota.r(), iota).chains.complex;
    } else {
        throw CLI::ValidationError("unknown method: " + method);
    }
    if (format == "csv") {
        for (const auto& f : out.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i)
                std::cout << (i ? "," : "")
                          << out.vertex_labels()[static_cast<std::size_t>(f[i])];
            std::cout << "\n";
        }
        return 0;
    }
    emit(mcs::complex_to_json(out), format);
    return 0;
}

int run_transform(const std::string& kind, long d, int r, const std::string& apply,
                  const std::string& format)
{
    if (!apply.empty()) {
        std::vector<BigInt> v = load_vector(apply, kind);
        if (d >= 0 && static_cast<std::size_t>(d) + 1 != v.size())
            throw CLI::ValidationError("--d disagrees with the applied vector length");
        std::vector<BigInt> out =
            kind == "f" ? mcs::transform_f(v, r) : mcs::transform_h(v, r);
        emit(mcs::bigvec_to_json(out), format);
        return 0;
    }
    if (d < 0)
        throw CLI::ValidationError("--d is required when no vector is applied");
    mcs::IntegerMatrix m = kind == "f" ? mcs::f_matrix(d, r) : mcs::h_matrix(d, r);
    json rows = json::array();
    for (const auto& row : m.a)
        rows.push_back(mcs::bigvec_to_json(row));
    emit(rows, format);
    return 0;
}

int run_eulerian(int d, int r, std::optional<int> s, std::optional<int> j,
                 const std::string& format)
{
    mcs::EulerianTable t = mcs::EulerianTable::recurrence(d, r);
    auto counts_row = [&](int jj, int ss) {
        json row = json::array();
        for (int m = 0; m <= d; ++m)
            row.push_back(mcs::bigint_to_json(t.count(jj, ss, m)));
        return row;
    };
    if (s && j) {
        json out;
        out["d"] = d;
        out["r"] = r;
        out["j"] = *j;
        out["s"] = *s;
        out["counts"] = counts_row(*j, *s);
        if (format == "csv") {
            emit(json::array({out["counts"]}), format);
            return 0;
        }
        emit(out, format);
        return 0;
    }
    json rows = json::array();
    for (int jj = 1; jj <= d; ++jj) {
        if (j && jj != *j)
            continue;
        for (int ss = 0; ss < r; ++ss) {
            if (s && ss != *s)
                continue;
            if (format == "csv") {
                json row = json::array({jj, ss});
                for (int m = 0; m <= d; ++m)
                    row.push_back(mcs::bigint_to_json(t.count(jj, ss, m)));
                rows.push_back(row);
            } else {
                json row;
                row["j"] = jj;
                row["s"] = ss;
                row["counts"] = counts_row(jj, ss);
                rows.push_back(row);
            }
        }
    }
    emit(rows, format);
    return 0;
}

int run_gamma(int d, int r, const std::string& which, const std::string& format)
{
    mcs::GammaWhich w =
        which == "color0" ? mcs::GammaWhich::Color0 : mcs::GammaWhich::Nonzero;
    mcs::EulerianSelector sel = w == mcs::GammaWhich::Color0 ? mcs::EulerianSelector::color(0)
                                                             : mcs::EulerianSelector::nonzero();
    mcs::IntPolynomial p = mcs::eulerian_polynomial(d, r, sel, mcs::EulerianMethod::Recurrence);
    long center = mcs::gamma_center(d, w);
    mcs::GammaVector by_poly =
        p.is_zero() ? mcs::GammaVector{center, {}} : mcs::gamma_vector(p, center);
    mcs::GammaVector by_slides = mcs::gamma_via_slides(d, r, w);
    json out;
    out["d"] = d;
    out["r"] = r;
    out["which"] = which;
    out["center"] = center;
    out["gammas"] = mcs::bigvec_to_json(by_slides.gammas);
    out["polynomial"] = p.str();
    bool agree = mcs::trimmed_gammas(by_poly) == mcs::trimmed_gammas(by_slides);
    out["decomposition_matches_slides"] = agree;
    if (format == "csv") {
        emit(json::array({out["gammas"]}), format);
        return agree ? 0 : 1;
    }
    emit(out, format);
    return agree ? 0 : 1;
}

int run_rr_check(const std::string& poly_csv, const std::string& format)
{
    mcs::IntPolynomial p(parse_csv_bigints(poly_csv));
    bool rr = mcs::is_real_rooted(p);
    json out;
    out["poly"] = p.str();
    out["coeffs"] = mcs::bigvec_to_json(p.coeffs());
    out["real_rooted"] = rr;
    emit(out, format);
    return rr ? 0 : 1;
}

int run_verify(const std::string& suite, const std::string& complex_path, int r, int N,
               int max_d, int max_r, const std::string& format)
{
    std::optional<mcs::SimplicialComplex> sc;
    if (!complex_path.empty())
        sc = mcs::load_complex(complex_path);
    auto need_complex = [&]() -> const mcs::SimplicialComplex& {
        if (!sc)
            throw CLI::ValidationError("--complex is required for suite " + suite);
        return *sc;
    };
    mcs::VerificationCertificate cert;
    if (suite == "main-theorem")
        cert = mcs::suite_main_theorem(need_complex(), r);
    else if (suite == "f-formula")
        cert = mcs::suite_f_formula(sc, r);
    else if (suite == "h-formula")
        cert = mcs::suite_h_formula(sc, r);
    else if (suite == "eulerian-recurrences")
        cert = mcs::suite_eulerian_recurrences(max_d > 0 ? max_d : 5, max_r);
    else if (suite == "gamma")
        cert = mcs::suite_gamma(max_d > 0 ? max_d : 5, max_r);
    else if (suite == "real-rooted")
        cert = mcs::suite_real_rooted(max_d > 0 ? max_d : 6, max_r);
    else if (suite == "interlacing")
        cert = mcs::suite_interlacing(max_d > 0 ? max_d : 4, max_r);
    else if (suite == "bar-partitions")
        cert = mcs::suite_bar_partitions(max_d > 0 ? max_d : 4, max_r);
    else if (suite == "prop51")
        cert = mcs::verify_prop_5_1(need_complex(), r);
    else if (suite == "prop52")
        cert = mcs::verify_prop_5_2(need_complex(), N);
    else
        throw CLI::ValidationError("unknown suite: " + suite);
    emit(mcs::certificate_to_json(cert), format);
    return cert.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact multichain subdivisions, colored descent statistics and vector transforms"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    std::string complex_path, method, iota_csv, kind, which, poly_csv, suite;
    int r = 1, N = 1, d = 1;
    long dl = -1;
    int max_d = -1, max_r = 3;
    std::optional<int> opt_s, opt_j;

    CLI::App* sub = app.add_subcommand("subdivide", "construct a subdivision of a complex");
    sub->add_option("--complex", complex_path, "complex JSON file")->required();
    sub->add_option("--method", method,
                    "barycentric|edgewise|colored|cms|type1|type2|multichain")
        ->required();
    sub->add_option("--r", r, "subdivision parameter r");
    sub->add_option("--N", N, "slicing depth N");
    sub->add_option("--iota", iota_csv, "shift map, e.g. 1,3,6");

    CLI::App* tra = app.add_subcommand("transform", "face/h vector transform matrices");
    tra->add_option("--kind", kind, "f|h")->required()->check(CLI::IsMember({"f", "h"}));
    tra->add_option("--d", dl, "matrix size parameter");
    tra->add_option("--r", r, "subdivision parameter r")->required();
    std::string apply_path;
    tra->add_option("--apply", apply_path, "vector JSON (array) or complex JSON to transform");

    CLI::App* eul = app.add_subcommand("eulerian", "colored descent-count tables");
    eul->add_option("--d", d, "group size")->required();
    eul->add_option("--r", r, "number of colors")->required();
    int s_val = 0, j_val = 0;
    CLI::Option* s_opt = eul->add_option("--s", s_val, "final color");
    CLI::Option* j_opt = eul->add_option("--j", j_val, "final-value index j (sigma_d = d+1-j)");

    CLI::App* gam = app.add_subcommand("gamma", "gamma vector of a descent polynomial");
    gam->add_option("--d", d, "group size")->required();
    gam->add_option("--r", r, "number of colors")->required();
    gam->add_option("--which", which, "color0|nonzero")
        ->required()
        ->check(CLI::IsMember({"color0", "nonzero"}));

    CLI::App* rrc = app.add_subcommand("rr-check", "exact real-rootedness certificate");
    rrc->add_option("--poly", poly_csv, "coefficients, lowest degree first, e.g. 1,3,1")
        ->required();

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite,
                    "main-theorem|f-formula|h-formula|eulerian-recurrences|gamma|real-rooted|"
                    "interlacing|prop51|prop52|bar-partitions")
        ->required();
    ver->add_option("--complex", complex_path, "complex JSON file");
    ver->add_option("--r", r, "subdivision parameter r");
    ver->add_option("--N", N, "slicing depth N");
    ver->add_option("--max-d", max_d, "sweep bound on d");
    ver->add_option("--max-r", max_r, "sweep bound on r");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sub->parsed())
            return run_subdivide(complex_path, method, r, sub->count("--r") > 0, N,
                                 sub->count("--N") > 0, iota_csv, format);
        if (tra->parsed())
            return run_transform(kind, dl, r, apply_path, format);
        if (eul->parsed()) {
            if (*s_opt)
                opt_s = s_val;
            if (*j_opt)
                opt_j = j_val;
            return run_eulerian(d, r, opt_s, opt_j, format);
        }
        if (gam->parsed())
            return run_gamma(d, r, which, format);
        if (rrc->parsed())
            return run_rr_check(poly_csv, format);
        if (ver->parsed())
            return run_verify(suite, complex_path, r, N, max_d, max_r, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const mcs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
