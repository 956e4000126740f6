// Command-line front end: orbifold/Seifert invariants, existence queries,
// connected-sum bookkeeping, model-neck verification, catalog regression.
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical non-convergence,
// 4 catalog discrepancy.

#include <complex>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "z2h/catalog.hpp"
#include "z2h/neck/bessel.hpp"
#include "z2h/neck/cylinder_bvp.hpp"
#include "z2h/neck/pairing.hpp"
#include "z2h/neck/s2_neck.hpp"
#include "z2h/neck/spectral_flow.hpp"
#include "z2h/orbifold.hpp"
#include "z2h/report.hpp"
#include "z2h/seifert.hpp"
#include "z2h/surgery.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitDiscrepancy = 4;

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
};

z2h::ReportFormat parse_format(const std::string& f) {
    if (f == "json") return z2h::ReportFormat::Json;
    if (f == "csv") return z2h::ReportFormat::Csv;
    if (f == "plain") return z2h::ReportFormat::Plain;
    throw std::invalid_argument("unknown format: " + f);
}

void write_report(const z2h::Report& rep, const OutputOptions& out) {
    if (out.out_path.empty()) return;
    std::ofstream f(out.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + out.out_path);
    f << z2h::emit(rep, parse_format(out.format));
}

void print_kv(const std::string& k, const std::string& v) {
    std::printf("  %-26s %s\n", k.c_str(), v.c_str());
}

void print_report(const z2h::Report& rep) {
    std::printf("%s  [%s]\n", rep.command.c_str(), z2h::to_string(rep.status).c_str());
    for (const auto& [k, v] : rep.inputs) print_kv(k, v);
    if (!rep.outputs.empty()) std::printf("  --\n");
    for (const auto& [k, v] : rep.outputs) print_kv(k, v);
    for (const auto& c : rep.citations) std::printf("  cite: %s\n", c.c_str());
}

void fill_existence(z2h::Report& rep, const z2h::ExistenceReport& e) {
    rep.outputs["exists"] = e.exists ? "true" : "false";
    rep.outputs["N"] = std::to_string(e.N);
    rep.outputs["dim_sections"] = e.dim_sections.str();
    rep.outputs["twist_k"] = std::to_string(e.twist_k);
    rep.outputs["aux_degree"] = std::to_string(e.aux_degree);
    if (e.exists) {
        rep.outputs["singular_fibers"] = std::to_string(e.singular_set.fiber_count);
        rep.outputs["singular_descriptor"] = e.singular_set.descriptor;
        rep.outputs["volume_pi_coefficient"] = e.metric.volume_pi_coefficient.str();
        rep.outputs["fiber_scale"] = e.metric.fiber_scale.str();
    } else {
        rep.outputs["failure_reason"] = e.failure_reason;
    }
    for (std::size_t i = 0; i < e.advisories.size(); ++i)
        rep.outputs["advisory_" + std::to_string(i)] = e.advisories[i];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z2-harmonic spinor and 1-form computations on Seifert-fibered 3-manifolds"};
    app.require_subcommand(1);

    OutputOptions out;
    app.add_option("--out", out.out_path, "write the structured report to this file");
    app.add_option("--format", out.format, "structured report format: json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    std::string seifert_data;
    std::string bundle_data;
    std::int64_t twist_k = 1, aux_degree = 0;
    bool strict_dim = false;
    std::string sign = "+";

    // --- invariants ---
    auto* inv = app.add_subcommand("invariants", "orbifold base and bundle arithmetic");
    inv->add_option("--seifert", seifert_data, "genus,b,alpha:beta,... (pairs optional)")->required();
    inv->add_option("--bundle", bundle_data, "extra bundle b,beta1,beta2,... over the base");

    // --- exists ---
    auto* exists = app.add_subcommand("exists", "existence queries");
    exists->require_subcommand(1);
    auto add_existence_flags = [&](CLI::App* cmd, bool with_twist) {
        cmd->add_option("--seifert", seifert_data, "genus,b,alpha:beta,...")->required();
        if (with_twist) {
            cmd->add_option("--k", twist_k, "fiber twist k");
            cmd->add_option("--aux", aux_degree, "degree of the auxiliary bundle");
            cmd->add_flag("--strict", strict_dim, "require dim >= 1 instead of >= 0");
            cmd->add_option("--sign", sign, "defining-bundle sign convention: + or -")
                ->check(CLI::IsMember({"+", "-"}));
        }
    };
    add_existence_flags(exists->add_subcommand("spinor", "spin Dirac operator"), true);
    add_existence_flags(exists->add_subcommand("spinc", "spin-c Dirac operator"), true);
    add_existence_flags(exists->add_subcommand("oneform", "Hodge-de Rham operator"), false);

    // --- brieskorn ---
    std::vector<std::int64_t> exponents;
    auto* brk = app.add_subcommand("brieskorn", "Brieskorn sphere Seifert invariants");
    brk->add_option("--exponents", exponents, "pairwise coprime integers >= 2")
        ->required()
        ->delimiter(',');

    // --- sum ---
    auto* sum = app.add_subcommand("sum", "connected-sum bookkeeping");
    sum->require_subcommand(1);
    std::int64_t d1 = 0, d2 = 0, b1_other = 0, genus1 = 2, genus2 = 2, k1 = 0, k2 = 0, cable_k = 1;
    bool z1_empty = false, z2_empty = false;
    auto* sum_h1 = sum->add_subcommand("h1", "anti-invariant H^1 of the branched double cover");
    sum_h1->add_option("--d1", d1)->required();
    sum_h1->add_option("--d2", d2)->required();
    sum_h1->add_flag("--z1-empty", z1_empty, "first branch locus empty (d1 read as b1)");
    sum_h1->add_flag("--z2-empty", z2_empty, "second branch locus empty (d2 read as b1)");
    (void)b1_other;
    auto* sum_zeros = sum->add_subcommand("zeros", "glued quadratic-differential zero profile");
    sum_zeros->add_option("--genus1", genus1)->required();
    sum_zeros->add_option("--genus2", genus2)->required();
    auto* sum_genus = sum->add_subcommand("genus", "branched double cover genus of the glued surface");
    sum_genus->add_option("--genus1", genus1)->required();
    sum_genus->add_option("--genus2", genus2)->required();
    auto* sum_dims = sum->add_subcommand("dims", "representation-variety and stratum dimensions");
    sum_dims->add_option("--d1", k1)->required();
    sum_dims->add_option("--d2", k2)->required();
    sum_dims->add_option("--cable-k", cable_k, "pairs for the cable-link descriptor");

    // --- neck ---
    auto* neck = app.add_subcommand("neck", "model-neck spectral verification");
    neck->require_subcommand(1);
    int nd = 1, nk = 0, nk_min = 0, nk_max = 0;
    double mu = 0.0, R0 = 50.0, ndelta = 0.1, s_max = 20.0, rel_tol = 1e-10;
    std::int64_t nell = 64;
    bool parallel = false;
    std::string condition = "ii", regime = "oneform_pinch";
    double rate_param = 1e-3;

    auto* n_flow = neck->add_subcommand("flow", "slice-operator spectral flow and weight windows");
    n_flow->add_option("--d", nd, "twist degree")->required();
    n_flow->add_option("--mu", mu, "also query kernel/cokernel at this weight");

    auto* n_ode = neck->add_subcommand("ode", "mode ODE decay exponents");
    n_ode->add_option("--d", nd)->required();
    n_ode->add_option("--kmin", nk_min)->required();
    n_ode->add_option("--kmax", nk_max)->required();
    n_ode->add_option("--smax", s_max);
    n_ode->add_option("--rel-tol", rel_tol);
    n_ode->add_flag("--parallel", parallel, "fan the mode sweep out over threads");

    auto* n_bvp = neck->add_subcommand("bvp", "finite-cylinder boundary value problem");
    n_bvp->add_option("--mu", mu);
    n_bvp->add_option("--R0", R0);
    n_bvp->add_option("--condition", condition, "i or ii")->check(CLI::IsMember({"i", "ii"}));

    auto* n_bessel = neck->add_subcommand("bessel", "Bessel cokernel mode and residual");
    n_bessel->add_option("--k", nk);
    n_bessel->add_option("--ell", nell)->required();
    n_bessel->add_option("--delta", ndelta)->required();

    auto* n_pairing = neck->add_subcommand("pairing", "obstruction pairing magnitude");
    n_pairing->add_option("--ell", nell)->required();
    n_pairing->add_option("--delta", ndelta);
    n_pairing->add_option("--R0", R0);

    auto* n_index = neck->add_subcommand("index", "3D mixed-boundary index");
    n_index->add_option("--delta", ndelta)->required();

    auto* n_rates = neck->add_subcommand("rates", "approximate-solution error rates");
    n_rates->add_option("--regime", regime)
        ->check(CLI::IsMember({"spinor_neck_stretch", "oneform_pinch", "torus_pinch"}));
    n_rates->add_option("--parameter", rate_param, "T or delta");
    n_rates->add_option("--mu", mu);

    auto* n_s2 = neck->add_subcommand("s2", "spherical-neck spectra and Fredholm window");
    int max_level = 6;
    n_s2->add_option("--max-level", max_level);

    // --- catalog ---
    auto* cat = app.add_subcommand("catalog", "named-example regression");
    cat->require_subcommand(1);
    auto* cat_verify = cat->add_subcommand("verify", "recompute every entry and compare");
    std::string catalog_path;
    cat_verify->add_option("--file", catalog_path, "catalog file (defaults to the built-in entries)");
    auto* cat_dump = cat->add_subcommand("dump", "print the built-in catalog in file format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalidInput;
    }

    z2h::Report rep;
    int exit_code = kExitOk;
    try {
        if (inv->parsed()) {
            rep.command = "invariants";
            rep.inputs["seifert"] = seifert_data;
            z2h::SeifertManifold y = z2h::seifert_from_string(seifert_data);
            z2h::OrbifoldSurface sigma = z2h::base_orbifold(y);
            z2h::OrbifoldLineBundle L = z2h::euler_bundle(y);
            z2h::OrbifoldLineBundle K = z2h::canonical_bundle(sigma);
            rep.outputs["base"] = sigma.str();
            rep.outputs["chi_orb"] = z2h::orb_euler_characteristic(sigma).str();
            rep.outputs["euler_number"] = z2h::euler_number(y).str();
            rep.outputs["defining_bundle"] = L.str();
            rep.outputs["deg_L"] = z2h::degree(L).str();
            rep.outputs["canonical_bundle"] = K.str();
            rep.outputs["deg_K"] = z2h::degree(K).str();
            rep.outputs["spin_base"] = z2h::is_spin_base(sigma) ? "true" : "false";
            rep.outputs["h0_K2"] = z2h::h0_dim(z2h::power(K, 2)).str();
            if (!bundle_data.empty()) {
                std::vector<std::string> parts;
                std::stringstream ss(bundle_data);
                std::string item;
                while (std::getline(ss, item, ',')) parts.push_back(item);
                std::vector<std::int64_t> betas;
                for (std::size_t i = 1; i < parts.size(); ++i) betas.push_back(std::stoll(parts[i]));
                z2h::OrbifoldLineBundle B(sigma, std::stoll(parts.at(0)), betas);
                rep.outputs["bundle"] = B.str();
                rep.outputs["deg_bundle"] = z2h::degree(B).str();
                rep.outputs["h0_bundle"] = z2h::h0_dim(B).str();
                rep.outputs["bundle_tensor_K"] = z2h::tensor(B, K).str();
            }
            rep.citations = {"Def. 4.1", "Thm. 4.3"};
        } else if (exists->parsed()) {
            z2h::SeifertManifold y = z2h::seifert_from_string(seifert_data);
            z2h::SpinorOptions opt;
            opt.strict_dim = strict_dim;
            opt.sign = sign == "-" ? z2h::BundleSign::Negative : z2h::BundleSign::Positive;
            z2h::ExistenceReport e;
            if (exists->get_subcommand("spinor")->parsed()) {
                rep.command = "exists spinor";
                e = z2h::spinor_existence(y, twist_k, aux_degree, opt);
                rep.citations = {"Lemma 4.4", "Prop. 4.5"};
            } else if (exists->get_subcommand("spinc")->parsed()) {
                rep.command = "exists spinc";
                e = z2h::spinc_existence(y, twist_k, aux_degree, opt);
                rep.citations = {"Prop. 4.7"};
            } else {
                rep.command = "exists oneform";
                e = z2h::oneform_existence(y);
                rep.citations = {"Prop. 4.11", "Prop. 1.9"};
            }
            rep.inputs["seifert"] = seifert_data;
            rep.inputs["k"] = std::to_string(twist_k);
            rep.inputs["aux"] = std::to_string(aux_degree);
            fill_existence(rep, e);
        } else if (brk->parsed()) {
            rep.command = "brieskorn";
            std::string in;
            for (auto v : exponents) in += (in.empty() ? "" : ",") + std::to_string(v);
            rep.inputs["exponents"] = in;
            z2h::SeifertManifold y = z2h::brieskorn_to_seifert(exponents);
            rep.outputs["seifert"] = z2h::seifert_to_string(y);
            rep.outputs["euler_number"] = z2h::euler_number(y).str();
            z2h::ExistenceReport e = z2h::oneform_existence(y);
            rep.outputs["oneform_exists"] = e.exists ? "true" : "false";
            rep.citations = {"Cor. 4.12"};
        } else if (sum->parsed()) {
            if (sum_h1->parsed()) {
                rep.command = "sum h1";
                rep.inputs["d1"] = std::to_string(d1);
                rep.inputs["d2"] = std::to_string(d2);
                z2h::CoverProfile p1{z1_empty ? 0 : d1, !z1_empty, z1_empty ? d1 : 0};
                z2h::CoverProfile p2{z2_empty ? 0 : d2, !z2_empty, z2_empty ? d2 : 0};
                rep.outputs["h1_minus"] = std::to_string(z2h::h1_minus_connected_sum(p1, p2));
                rep.citations = {"Eq. (4.1)"};
            } else if (sum_zeros->parsed()) {
                rep.command = "sum zeros";
                rep.inputs["genus1"] = std::to_string(genus1);
                rep.inputs["genus2"] = std::to_string(genus2);
                z2h::ZeroProfile z = z2h::glued_zero_profile(genus1, genus2);
                rep.outputs["simple_zeros"] = std::to_string(z.simple_zeros);
                rep.outputs["even_zero_multiplicity"] = std::to_string(z.even_zero_multiplicity);
                rep.outputs["total_with_multiplicity"] = std::to_string(z.total_with_multiplicity);
                rep.citations = {"Thm. 4.13"};
            } else if (sum_genus->parsed()) {
                rep.command = "sum genus";
                rep.inputs["genus1"] = std::to_string(genus1);
                rep.inputs["genus2"] = std::to_string(genus2);
                rep.outputs["glued_cover_genus"] = std::to_string(z2h::glued_cover_genus(genus1, genus2));
                rep.outputs["summand_cover_genus_1"] =
                    std::to_string(z2h::branched_cover_genus(genus1, 4 * genus1 - 4));
                rep.outputs["summand_cover_genus_2"] =
                    std::to_string(z2h::branched_cover_genus(genus2, 4 * genus2 - 4));
                if (genus1 == 1 || genus2 == 1)
                    rep.outputs["warning"] = "genus-1 summand has an empty branch set";
                rep.citations = {"Riemann-Hurwitz"};
            } else {
                rep.command = "sum dims";
                rep.inputs["d1"] = std::to_string(k1);
                rep.inputs["d2"] = std::to_string(k2);
                rep.outputs["representation_dim"] = std::to_string(z2h::representation_dim_sum(k1, k2));
                z2h::StratumGap g = z2h::stratum_gap(k1, k2);
                rep.outputs["stratum_glued"] = std::to_string(g.glued);
                rep.outputs["stratum_expected_top"] = std::to_string(g.expected_top);
                rep.outputs["stratum_gap"] = std::to_string(g.gap);
                rep.outputs["stratum_note"] =
                    "expected_top assumes the dim R(Y) = 2k correspondence (hypothesis)";
                z2h::CableDescriptor cd = z2h::cable_descriptor(cable_k);
                rep.outputs["cable"] = cd.text;
                rep.outputs["cable_components"] = std::to_string(cd.components);
                rep.citations = {"Sec. 4.4.2", "Thm. 1.11"};
            }
        } else if (neck->parsed()) {
            if (n_flow->parsed()) {
                rep.command = "neck flow";
                rep.inputs["d"] = std::to_string(nd);
                z2h::SpectralFlowReport f = z2h::spectral_flow(nd);
                rep.outputs["start_spectrum"] = f.start_descriptor;
                rep.outputs["end_spectrum"] = f.end_descriptor;
                rep.outputs["forbidden"] = f.forbidden_descriptor;
                for (const auto& w : f.windows) {
                    char key[64], val[64];
                    std::snprintf(key, sizeof(key), "window_%+.2f_%+.2f", w.lo, w.hi);
                    std::snprintf(val, sizeof(val), "kernel=%d cokernel=%d", w.kernel_dim,
                                  w.cokernel_dim);
                    rep.outputs[key] = val;
                }
                if (n_flow->count("--mu")) {
                    rep.inputs["mu"] = z2h::format_double(mu);
                    auto [ker, coker] = z2h::mode_kernel_dimension(nd, mu);
                    rep.outputs["kernel_at_mu"] = std::to_string(ker);
                    rep.outputs["cokernel_at_mu"] = std::to_string(coker);
                }
                rep.citations = {"Lemma 3.2"};
            } else if (n_ode->parsed()) {
                rep.command = "neck ode";
                rep.inputs["d"] = std::to_string(nd);
                rep.inputs["kmin"] = std::to_string(nk_min);
                rep.inputs["kmax"] = std::to_string(nk_max);
                z2h::OdeSolveConfig cfg;
                cfg.s_max = s_max;
                cfg.rel_tol = rel_tol;
                std::vector<std::future<z2h::ModeOdeResult>> futs;
                std::vector<z2h::ModeOdeResult> results;
                for (int k = nk_min; k <= nk_max; ++k) {
                    if (parallel)
                        futs.push_back(std::async(std::launch::async,
                                                  [=] { return z2h::integrate_mode_ode(nd, k, cfg); }));
                    else
                        results.push_back(z2h::integrate_mode_ode(nd, k, cfg));
                }
                for (auto& f : futs) results.push_back(f.get());
                for (const auto& r : results) {
                    char key[32], val[128];
                    std::snprintf(key, sizeof(key), "k_%+d", r.k);
                    std::snprintf(val, sizeof(val), "exp_plus=%.6f exp_minus=%.6f r2=%.6f/%.6f",
                                  r.exponent_plus, r.exponent_minus, r.r2_plus, r.r2_minus);
                    rep.outputs[key] = val;
                }
                rep.citations = {"Lemma 3.2 proof"};
            } else if (n_bvp->parsed()) {
                rep.command = "neck bvp";
                rep.inputs["mu"] = z2h::format_double(mu);
                rep.inputs["R0"] = z2h::format_double(R0);
                rep.inputs["condition"] = condition;
                z2h::NeckModel2D model{1, mu, R0};
                auto bc = condition == "i" ? z2h::BoundaryCondition::SelfAdjointBlack
                                           : z2h::BoundaryCondition::MatchedBlue;
                z2h::CylinderBvpResult r = z2h::finite_cylinder_bvp(model, bc);
                rep.outputs["kernel_dim"] = std::to_string(r.kernel_dim);
                rep.outputs["cokernel_dim"] = std::to_string(r.cokernel_dim);
                rep.outputs["sigma_max"] = z2h::format_double(r.sigma_max);
                rep.outputs["smallest_nonzero_sigma"] = z2h::format_double(r.smallest_nonzero_sigma);
                rep.outputs["gap"] = z2h::format_double(r.gap);
                rep.citations = {"Sec. 3.2 (i)/(ii)"};
            } else if (n_bessel->parsed()) {
                rep.command = "neck bessel";
                rep.inputs["k"] = std::to_string(nk);
                rep.inputs["ell"] = std::to_string(nell);
                rep.inputs["delta"] = z2h::format_double(ndelta);
                z2h::ModeProblem3D p{nk, nell, ndelta, 0.0};
                std::vector<double> rs;
                for (double R = 1.0; R <= 20.0; R += 1.0) rs.push_back(R);
                z2h::BesselSolution sol = z2h::bessel_mode_solution(p, rs);
                rep.outputs["residual"] = z2h::format_double(sol.residual);
                rep.outputs["samples"] = std::to_string(sol.samples.size());
                rep.outputs["alpha_scaled_at_R1"] = z2h::format_double(sol.samples.front().alpha_scaled);
                rep.outputs["beta_scaled_at_R1"] = z2h::format_double(sol.samples.front().beta_scaled);
                rep.citations = {"Lemma 3.12"};
            } else if (n_pairing->parsed()) {
                rep.command = "neck pairing";
                rep.inputs["ell"] = std::to_string(nell);
                rep.inputs["delta"] = z2h::format_double(ndelta);
                rep.inputs["R0"] = z2h::format_double(R0);
                auto pr = z2h::obstruction_pairing(nell, ndelta, R0, {0, 0}, {1, 0}, {1, 0}, {0, 0});
                rep.outputs["magnitude_scale"] = z2h::format_double(pr.magnitude_scale);
                rep.outputs["with_psi_bar_abs"] = z2h::format_double(std::abs(pr.with_psi_bar));
                rep.citations = {"Prop. 3.14"};
            } else if (n_index->parsed()) {
                rep.command = "neck index";
                rep.inputs["delta"] = z2h::format_double(ndelta);
                rep.outputs["L"] = std::to_string(z2h::index_3d_cutoff(ndelta));
                rep.outputs["index"] = std::to_string(z2h::index_3d(ndelta));
                rep.outputs["constraint_count"] = std::to_string(z2h::index_3d_constraint_count(ndelta));
                rep.citations = {"Prop. 3.9"};
            } else if (n_rates->parsed()) {
                rep.command = "neck rates";
                rep.inputs["regime"] = regime;
                rep.inputs["parameter"] = z2h::format_double(rate_param);
                rep.inputs["mu"] = z2h::format_double(mu);
                z2h::ErrorRegime rg = regime == "spinor_neck_stretch"
                                          ? z2h::ErrorRegime::SpinorNeckStretch
                                          : (regime == "torus_pinch" ? z2h::ErrorRegime::TorusPinch
                                                                     : z2h::ErrorRegime::OneFormPinch);
                z2h::ErrorRatePrediction p = z2h::error_rate(rg, rate_param, mu);
                rep.outputs["predicted_norm_bound"] = z2h::format_double(p.predicted_norm_bound);
                rep.outputs["error_vanishes"] = p.error_vanishes ? "true" : "false";
                rep.outputs["note"] = p.note;
                rep.citations = {"Lemma 3.6", "Lemma 3.8", "Lemma 3.13"};
            } else if (n_s2->parsed()) {
                rep.command = "neck s2";
                rep.inputs["max_level"] = std::to_string(max_level);
                z2h::S2SpectraReport s = z2h::s2_neck_spectra(max_level);
                std::string fs, os;
                for (double v : s.functions_spectrum) fs += (fs.empty() ? "" : ",") + std::to_string((long long)v);
                for (double v : s.oneform_spectrum) os += (os.empty() ? "" : ",") + std::to_string((long long)v);
                rep.outputs["functions_spectrum"] = fs;
                rep.outputs["oneform_spectrum"] = os;
                z2h::S2FredholmWindow w = z2h::s2_fredholm_window();
                rep.outputs["mu0"] = z2h::format_double(w.mu0);
                rep.outputs["nearest_forbidden"] = z2h::format_double(w.nearest_forbidden);
                rep.citations = {"Lemma 3.11"};
            }
        } else if (cat->parsed()) {
            if (cat_dump->parsed()) {
                rep.command = "catalog dump";
                std::fputs(z2h::catalog_to_text(z2h::catalog()).c_str(), stdout);
                write_report(rep, out);
                return kExitOk;
            }
            rep.command = "catalog verify";
            std::vector<z2h::CatalogEntry> entries =
                catalog_path.empty() ? z2h::catalog() : z2h::load_catalog_file(catalog_path);
            const auto slash = catalog_path.find_last_of('/');
            rep.inputs["source"] = catalog_path.empty()
                                       ? "builtin"
                                       : catalog_path.substr(slash == std::string::npos ? 0 : slash + 1);
            bool discrepancy = false;
            for (const auto& v : z2h::verify_catalog(entries)) {
                std::string line = v.status == z2h::VerifyStatus::Ok ? "ok" : "discrepancy";
                for (const auto& m : v.mismatches) line += "; " + m;
                for (const auto& n : v.notes) line += "; " + n;
                rep.outputs[v.entry.name] = line;
                rep.citations.push_back(v.entry.name + ": " + v.entry.citation);
                if (v.status == z2h::VerifyStatus::Discrepancy) discrepancy = true;
            }
            if (discrepancy) {
                rep.status = z2h::ReportStatus::Discrepancy;
                exit_code = kExitDiscrepancy;
            }
        }
    } catch (const z2h::numerical_error& err) {
        rep.status = z2h::ReportStatus::NumericalError;
        rep.outputs["error"] = err.what();
        print_report(rep);
        write_report(rep, out);
        return kExitNumerical;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitInvalidInput;
    }

    print_report(rep);
    write_report(rep, out);
    return exit_code;
}
