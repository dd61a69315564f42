// Command-line surface: mod-4 value tables, eigenvalue dumps, kernel grids,
// transform application, and the verification suites.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gft/intpoly.hpp"
#include "gft/kernels.hpp"
#include "gft/opalg.hpp"
#include "gft/transform.hpp"
#include "gft/verify.hpp"

using namespace gft;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw CLI::ValidationError("--out", "cannot open " + out_path);
    os << text;
}

Setting parse_setting(const std::string& s) {
    if (s == "harmonic") return Setting::Harmonic;
    if (s == "clifford") return Setting::Clifford;
    throw CLI::ValidationError("--setting", "must be harmonic or clifford");
}

FSpec make_symbol(Setting setting, int m, const std::vector<int>& tuple,
                  const std::vector<int>& seq) {
    bool even = m % 2 == 0;
    bool integer_family = (setting == Setting::Harmonic) ? even : !even;
    FFamily fam = integer_family ? FFamily::EvenSquares : FFamily::HalfIntegerSquares;
    if (!seq.empty()) return FSpec::general(fam, seq);
    if (tuple.size() != 4) throw CLI::ValidationError("--F", "expected a,b,c,d");
    return FSpec::tuple(fam, tuple[0], tuple[1], tuple[2], tuple[3]);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_tables(char family, int nmax, int xmax, bool selectors, const std::string& out) {
    std::string csv = selectors
        ? table_csv(selector_table_labels(family), selector_table(family, xmax))
        : table_csv(mod4_table_labels(family, nmax), mod4_table(family, nmax, xmax));
    emit(csv, out);
    return 0;
}

int run_spectrum(const KernelSpec& spec, int jmax, int kmax, const std::string& out) {
    std::ostringstream os;
    os << "j\\k";
    for (int k = 0; k <= kmax; ++k) os << "," << k;
    os << "\n";
    for (int j = 0; j <= jmax; ++j) {
        os << j;
        for (int k = 0; k <= kmax; ++k) os << "," << spectrum(spec, j, k).token();
        os << "\n";
    }
    emit(os.str(), out);
    return 0;
}

int run_kernel(const KernelSpec& spec, const std::string& path, int samples, double scale,
               unsigned seed, const std::string& out) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-scale, scale);
    const int m = spec.m;

    std::ostringstream os;
    os << std::string("x1");
    for (int i = 2; i <= m; ++i) os << ",x" << i;
    for (int i = 1; i <= m; ++i) os << ",y" << i;
    std::vector<unsigned> blades;
    if (spec.setting == Setting::Harmonic) {
        os << ",re,im";
    } else {
        blades.push_back(0u);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) blades.push_back((1u << i) | (1u << j));
        for (unsigned b : blades) os << ",re_b" << b << ",im_b" << b;
    }
    os << "\n";

    const bool closed = (path == "closed");
    if (closed) {
        if (!spec.F.is_tuple)
            throw CLI::ValidationError("--path", "closed forms exist only for 4-tuple symbols");
        if (spec.setting == Setting::Clifford &&
            (m % 2 != 0 || spec.F.abcd[2] != 0 || spec.F.abcd[3] != 0))
            throw CLI::ValidationError("--path",
                                       "clifford closed forms need even m and c = d = 0");
        if (spec.setting == Setting::Harmonic && !(m % 2 == 0 && spec.F.abcd[3] == 0) &&
            !cos_sin_spectrum_certified(spec))
            throw CLI::ValidationError("--path", "no closed form for this spectrum");
    }
    for (int s = 0; s < samples; ++s) {
        std::vector<double> x(m), y(m);
        for (auto& v : x) v = u(rng);
        for (auto& v : y) v = u(rng);
        for (double v : x) os << fmt_double(v) << ",";
        for (int i = 0; i < m; ++i) os << fmt_double(y[i]) << ",";
        if (spec.setting == Setting::Harmonic) {
            std::complex<double> k;
            if (closed) {
                if (m % 2 == 0 && spec.F.is_tuple && spec.F.abcd[3] == 0)
                    k = closed_kernel_harmonic_even(spec.F.abcd[0], spec.F.abcd[1], spec.F.abcd[2], m,
                                                    x, y);
                else
                    k = closed_kernel_cos_sin(spec, x, y);
            } else {
                k = series_kernel_harmonic(spec, x, y);
            }
            os << fmt_double(k.real()) << "," << fmt_double(k.imag());
        } else {
            NumMultivector k = closed
                ? closed_kernel_clifford_even(spec.F.abcd[0], spec.F.abcd[1], m, x, y)
                : series_kernel_clifford(spec, x, y);
            bool first = true;
            for (unsigned b : blades) {
                auto v = k.component(b);
                os << (first ? "" : ",") << fmt_double(v.real()) << "," << fmt_double(v.imag());
                first = false;
            }
        }
        os << "\n";
    }
    emit(os.str(), out);
    return 0;
}

int run_transform(const KernelSpec& spec, const std::string& input,
                  const std::vector<std::string>& ys, const std::string& out) {
    GaussPoly f(spec.m);
    if (input.rfind("basis:", 0) == 0) {
        std::stringstream ss(input.substr(6));
        int j, k;
        char comma;
        if (!(ss >> j >> comma >> k)) throw CLI::ValidationError("--input", "expected basis:j,k");
        BasisIndex idx{j, k, {}};
        f = (spec.setting == Setting::Harmonic) ? hermite_phi(idx, spec.m)
                                                : clifford_psi(idx, spec.m);
    } else if (input.rfind("json:", 0) == 0) {
        std::ifstream is(input.substr(5));
        if (!is) throw CLI::ValidationError("--input", "cannot open " + input.substr(5));
        std::stringstream buf;
        buf << is.rdbuf();
        f = GaussPoly::from_json(buf.str());
        if (f.dim() != spec.m) throw CLI::ValidationError("--input", "input dimension != m");
    } else {
        throw CLI::ValidationError("--input", "expected basis:j,k or json:FILE");
    }

    GaussPoly g = eigen_transform(spec, f);

    std::ostringstream os;
    os << "y1";
    for (int i = 2; i <= spec.m; ++i) os << ",y" << i;
    std::vector<unsigned> blades;
    for (unsigned b = 0; b < (1u << spec.m); ++b) blades.push_back(b);
    for (unsigned b : blades) os << ",re_b" << b << ",im_b" << b;
    os << "\n";
    for (const auto& ystr : ys) {
        std::vector<double> y;
        std::stringstream ss(ystr);
        std::string tok;
        while (std::getline(ss, tok, ',')) y.push_back(std::stod(tok));
        if (static_cast<int>(y.size()) != spec.m)
            throw CLI::ValidationError("--y", "expected " + std::to_string(spec.m) + " coordinates");
        NumMultivector v = g.eval(y);
        for (int i = 0; i < spec.m; ++i) os << (i ? "," : "") << fmt_double(y[i]);
        for (unsigned b : blades) {
            auto c = v.component(b);
            os << "," << fmt_double(c.real()) << "," << fmt_double(c.imag());
        }
        os << "\n";
    }
    emit(os.str(), out);
    return 0;
}

int run_verify(const std::string& suite, const std::string& out) {
    Tolerances tol = Tolerances::from_env();
    auto results = run_verification(suite, tol);
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.module << ": " << r.name << " ("
           << r.detail << ")\n";
        if (r.pass) ++passed;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    emit(os.str(), out);
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Fourier transform toolkit"};
    app.require_subcommand(1);

    // tables
    auto* tables = app.add_subcommand("tables", "emit mod-4 value tables as CSV");
    std::string family = "E";
    int nmax = 5, xmax = 15;
    bool selectors = false;
    std::string tab_out;
    tables->add_option("--family", family, "polynomial family, E or D")
        ->check(CLI::IsMember({"E", "D"}));
    tables->add_option("--nmax", nmax, "largest polynomial index");
    tables->add_option("--xmax", xmax, "largest column");
    tables->add_flag("--selectors", selectors, "emit the selector rows instead");
    tables->add_option("--out", tab_out, "write to file instead of stdout");

    // common transform-family options
    std::string setting_str = "harmonic";
    int m = 2;
    std::vector<int> Ftuple{0, 0, 0, 0};
    std::vector<int> Fseq;

    auto add_spec_opts = [&](CLI::App* cmd) {
        cmd->add_option("--setting", setting_str, "harmonic or clifford")
            ->check(CLI::IsMember({"harmonic", "clifford"}));
        cmd->add_option("--m", m, "dimension (>= 2)");
        cmd->add_option("--F", Ftuple, "symbol parameters a,b,c,d in {0..3}")->delimiter(',');
        cmd->add_option("--Fseq", Fseq, "symbol coefficient sequence a_0,a_1,...")->delimiter(',');
    };

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "dump eigenvalues as phase tokens");
    int jmax = 3, kmax = 7;
    std::string spec_out;
    add_spec_opts(spectrum_cmd);
    spectrum_cmd->add_option("--jmax", jmax, "largest ladder index");
    spectrum_cmd->add_option("--kmax", kmax, "largest degree index");
    spectrum_cmd->add_option("--out", spec_out, "write to file instead of stdout");

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "evaluate the kernel on sample points");
    std::string path = "series";
    int samples = 16;
    double scale = 1.5;
    unsigned seed = 1;
    std::string ker_out;
    add_spec_opts(kernel_cmd);
    kernel_cmd->add_option("--path", path, "series or closed")
        ->check(CLI::IsMember({"series", "closed"}));
    kernel_cmd->add_option("--samples", samples, "number of (x,y) samples");
    kernel_cmd->add_option("--scale", scale, "coordinates drawn uniformly from [-scale, scale]");
    kernel_cmd->add_option("--seed", seed, "sample generator seed");
    kernel_cmd->add_option("--out", ker_out, "write to file instead of stdout");

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "apply the transform to a function");
    std::string input = "basis:0,0";
    std::vector<std::string> ys;
    std::string tr_out;
    add_spec_opts(transform_cmd);
    transform_cmd->add_option("--input", input, "basis:j,k or json:FILE");
    transform_cmd->add_option("--y", ys, "evaluation point y1,...,ym (repeatable)")
        ->take_all()
        ->expected(-1);
    transform_cmd->add_option("--out", tr_out, "write to file instead of stdout");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    std::string suite = "all";
    std::string ver_out;
    verify_cmd->add_option("--suite", suite, "all, exact or numeric")
        ->check(CLI::IsMember({"all", "exact", "numeric"}));
    verify_cmd->add_option("--out", ver_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) return run_tables(family[0], nmax, xmax, selectors, tab_out);
        Setting setting = parse_setting(setting_str);
        if (verify_cmd->parsed()) return run_verify(suite, ver_out);
        KernelSpec spec(m, setting, make_symbol(setting, m, Ftuple, Fseq));
        if (spectrum_cmd->parsed()) return run_spectrum(spec, jmax, kmax, spec_out);
        if (kernel_cmd->parsed()) return run_kernel(spec, path, samples, scale, seed, ker_out);
        if (transform_cmd->parsed()) {
            if (ys.empty()) ys = {std::string(m == 2 ? "0.5,0.5" : "0.5,0.5,0.5")};
            return run_transform(spec, input, ys, tr_out);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
