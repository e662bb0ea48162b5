// Command-line front end for the discrete-variable Gaussian state library.
// Emits CSV/JSON artifacts; exit codes: 0 ok, 2 bad arguments, 3 IO failure,
// 4 invariant failure.

#include <complex>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dvgauss/dvgauss.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitInvariant = 4;

dvg::CovMat2 sigma_from_triple(const std::vector<double>& v) {
    if (v.size() != 3) {
        throw std::invalid_argument("--sigma expects three values: s11,s12,s22");
    }
    return dvg::CovMat2(v[0], v[1], v[2]);
}

struct Common {
    std::string out = "-";
    int digits = dvg::kDefaultDigits;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--out", common.out, "Output path; '-' writes to stdout")->capture_default_str();
    cmd->add_option("--digits", common.digits, "Significant digits in numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

void emit(const Common& common, const std::string& content) {
    dvg::write_text_file(common.out, content);
}

std::string fmt(double v, int digits) { return dvg::format_value(v, digits); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-variable Gaussian states on the finite phase-space lattice"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags win on conflict");

    // purity-table
    auto* purity_cmd = app.add_subcommand("purity-table", "Purity of a Gaussian state across dimensions");
    std::vector<double> pt_sigma;
    std::vector<int> pt_dims{3, 5, 7, 9};
    Common pt_common;
    purity_cmd->add_option("--sigma", pt_sigma, "Covariance upper triangle s11,s12,s22")
        ->required()->delimiter(',');
    purity_cmd->add_option("--dims", pt_dims, "Odd dimensions to evaluate")->delimiter(',');
    add_common(purity_cmd, pt_common);

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Density-operator spectrum of a Gaussian state");
    std::vector<double> sp_sigma;
    int sp_dim = 7;
    Common sp_common;
    spectrum_cmd->add_option("--sigma", sp_sigma, "Covariance upper triangle s11,s12,s22")
        ->required()->delimiter(',');
    spectrum_cmd->add_option("--dim", sp_dim, "Odd dimension")->capture_default_str();
    add_common(spectrum_cmd, sp_common);

    // thermal
    auto* thermal_cmd = app.add_subcommand("thermal", "Thermal-state spectrum vs geometric reference");
    double th_nu = 2.0;
    int th_dim = 7;
    Common th_common;
    thermal_cmd->add_option("--nu", th_nu, "Temperature parameter nu > 1")->capture_default_str();
    thermal_cmd->add_option("--dim", th_dim, "Odd dimension")->capture_default_str();
    add_common(thermal_cmd, th_common);

    // commutator
    auto* comm_cmd = app.add_subcommand("commutator", "Spectrum of -i([q,p] - i d/(2 pi))");
    int cm_dim = 11;
    double cm_eps = 1e-6;
    Common cm_common;
    comm_cmd->add_option("--dim", cm_dim, "Odd dimension")->capture_default_str();
    comm_cmd->add_option("--epsilon", cm_eps, "Subspace threshold reported alongside the spectrum")
        ->capture_default_str();
    add_common(comm_cmd, cm_common);

    // wigner
    auto* wig_cmd = app.add_subcommand("wigner", "Wigner-function grid of g_kappa or of a Gaussian state");
    double wg_kappa = 0.0;
    std::vector<double> wg_sigma;
    int wg_dim = 31;
    std::string wg_format = "csv";
    Common wg_common;
    auto* kappa_opt = wig_cmd->add_option("--kappa", wg_kappa, "Gaussian parameter kappa > 0");
    auto* sigma_opt = wig_cmd->add_option("--sigma", wg_sigma, "Covariance upper triangle s11,s12,s22")
        ->delimiter(',');
    kappa_opt->excludes(sigma_opt);
    wig_cmd->add_option("--dim", wg_dim, "Odd dimension")->capture_default_str();
    wig_cmd->add_option("--format", wg_format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    add_common(wig_cmd, wg_common);

    // transform
    auto* tr_cmd = app.add_subcommand("transform", "Gaussian-unitary deviation from its symplectic image");
    double tr_a = 0.0;
    std::vector<double> tr_b{0.0, 0.0};
    std::vector<double> tr_sigma;
    std::vector<int> tr_dims{5, 7, 9, 11, 13, 15};
    std::string tr_norm = "both";
    Common tr_common;
    tr_cmd->add_option("--A", tr_a, "Hamiltonian coefficient A")->capture_default_str();
    tr_cmd->add_option("--B", tr_b, "Hamiltonian coefficient B as re,im")->delimiter(',')
        ->expected(2);
    tr_cmd->add_option("--sigma", tr_sigma, "Covariance upper triangle s11,s12,s22")
        ->required()->delimiter(',');
    tr_cmd->add_option("--dims", tr_dims, "Odd dimensions to evaluate")->delimiter(',');
    tr_cmd->add_option("--norm", tr_norm, "frobenius, spectral, or both")
        ->check(CLI::IsMember({"frobenius", "spectral", "both"}))->capture_default_str();
    add_common(tr_cmd, tr_common);

    // check
    auto* check_cmd = app.add_subcommand("check", "Run the full invariant suite");
    Common ck_common;
    add_common(check_cmd, ck_common);

    // Let app-level options (notably --config) be given after the subcommand.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        if (purity_cmd->parsed()) {
            const dvg::CovMat2 sigma = sigma_from_triple(pt_sigma);
            std::ostringstream os;
            os << "d,purity,limit\n";
            for (int d : pt_dims) {
                const dvg::GaussianState st = dvg::synthesize(sigma, dvg::LatticeDim(d));
                os << d << ',' << fmt(dvg::purity(st), pt_common.digits) << ','
                   << fmt(dvg::purity_limit(sigma), pt_common.digits) << '\n';
            }
            emit(pt_common, os.str());
        } else if (spectrum_cmd->parsed()) {
            const dvg::CovMat2 sigma = sigma_from_triple(sp_sigma);
            const dvg::GaussianState st = dvg::synthesize(sigma, dvg::LatticeDim(sp_dim));
            const Eigen::VectorXd spec = dvg::spectrum_descending(st);
            std::ostringstream os;
            os << "n,lambda\n";
            for (Eigen::Index i = 0; i < spec.size(); ++i) {
                os << i << ',' << fmt(spec(i), sp_common.digits) << '\n';
            }
            emit(sp_common, os.str());
        } else if (thermal_cmd->parsed()) {
            const dvg::LatticeDim dim(th_dim);
            const dvg::GaussianState st = dvg::thermal_state(th_nu, dim);
            const Eigen::VectorXd spec = dvg::spectrum_descending(st);
            const Eigen::VectorXd ref = dvg::geometric_reference(th_nu, dim);
            std::ostringstream os;
            os << "n,lambda_n,N_n,deviation\n";
            for (int i = 0; i < dim.d; ++i) {
                os << i << ',' << fmt(spec(i), th_common.digits) << ','
                   << fmt(ref(i), th_common.digits) << ','
                   << fmt(spec(i) - ref(i), th_common.digits) << '\n';
            }
            emit(th_common, os.str());
        } else if (comm_cmd->parsed()) {
            const dvg::CommutatorSpectrum spec = dvg::commutator_spectrum(dvg::LatticeDim(cm_dim));
            const dvg::CanonicalSubspace sub = dvg::canonical_subspace(spec, cm_eps);
            std::ostringstream os;
            os << "# d_eps(epsilon=" << fmt(cm_eps, 6) << ") = " << sub.d_eps << '\n';
            os << "index,lambda\n";
            for (int i = 0; i < cm_dim; ++i) {
                os << (i + 1) << ',' << fmt(spec.eigenvalues(i), cm_common.digits) << '\n';
            }
            emit(cm_common, os.str());
        } else if (wig_cmd->parsed()) {
            const dvg::LatticeDim dim(wg_dim);
            dvg::WignerGrid grid(dim, 1);
            if (sigma_opt->count() > 0) {
                grid = dvg::synthesize(sigma_from_triple(wg_sigma), dim).grid;
            } else {
                const double kappa = kappa_opt->count() > 0 ? wg_kappa : 1.0;
                if (!(kappa > 0.0)) throw std::invalid_argument("--kappa must be positive");
                grid = dvg::wigner_of_pure(dvg::gaussian_vector(kappa, dim), dim);
            }
            if (wg_format == "json") {
                emit(wg_common, dvg::grid_to_json(grid).dump(2) + "\n");
            } else {
                std::ostringstream os;
                dvg::write_grid_csv(grid, os, wg_common.digits);
                emit(wg_common, os.str());
            }
        } else if (tr_cmd->parsed()) {
            const dvg::CovMat2 sigma = sigma_from_triple(tr_sigma);
            const std::complex<double> b(tr_b[0], tr_b[1]);
            std::ostringstream os;
            os << "A_re,B_re,B_im,d,norm_kind,deviation\n";
            for (int d : tr_dims) {
                const dvg::LatticeDim dim(d);
                const dvg::GaussianTransformSpec spec = dvg::gaussian_transform(tr_a, b, dim);
                const auto row = [&](const char* kind, dvg::MatrixNorm norm) {
                    os << fmt(tr_a, tr_common.digits) << ',' << fmt(b.real(), tr_common.digits)
                       << ',' << fmt(b.imag(), tr_common.digits) << ',' << d << ',' << kind << ','
                       << fmt(dvg::transform_deviation(spec, sigma, dim, norm), tr_common.digits)
                       << '\n';
                };
                if (tr_norm == "frobenius" || tr_norm == "both") {
                    row("frobenius", dvg::MatrixNorm::frobenius);
                }
                if (tr_norm == "spectral" || tr_norm == "both") {
                    row("spectral", dvg::MatrixNorm::spectral);
                }
            }
            emit(tr_common, os.str());
        } else if (check_cmd->parsed()) {
            const std::vector<dvg::CheckResult> results = dvg::run_all_checks();
            std::ostringstream os;
            os << "name,residual,tolerance,status\n";
            for (const dvg::CheckResult& r : results) {
                os << r.name << ',' << fmt(r.residual, ck_common.digits) << ','
                   << fmt(r.tolerance, ck_common.digits) << ',' << (r.passed ? "pass" : "fail")
                   << '\n';
            }
            emit(ck_common, os.str());
            if (!dvg::all_passed(results)) return kExitInvariant;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
