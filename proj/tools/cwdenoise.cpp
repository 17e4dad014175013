// Command-line front end: noise simulation, denoising, quality metrics, and
// the PSNR benchmark harness.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cwdenoise/cwdenoise.hpp"

namespace {

using namespace cwdenoise;

struct DenoiseFlags {
    int levels = 2;
    double sigma_s = 1.8;
    double sigma_r = 0.0;       // > 0 = explicit
    double sigma_r_mult = 2.0;
    int radius = 0;
    std::string rule = "bayes";
    std::string mode = "soft";
    bool per_component = false;
    double known_sigma = -1.0;  // >= 0 = known
    bool all_scales = false;
};

void add_denoise_flags(CLI::App* cmd, DenoiseFlags& f) {
    cmd->add_option("--levels", f.levels, "decomposition levels (1-5)")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    cmd->add_option("--sigma-s", f.sigma_s, "bilateral spatial std in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--sigma-r", f.sigma_r, "explicit bilateral range std (overrides the multiplier policy)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sigma-r-mult", f.sigma_r_mult, "range std = mult * residue noise std")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--radius", f.radius, "bilateral window half-width (default ceil(2*sigma_s))")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rule", f.rule, "threshold rule")
        ->check(CLI::IsMember({"bayes", "universal"}))
        ->capture_default_str();
    cmd->add_option("--mode", f.mode, "threshold mode")
        ->check(CLI::IsMember({"soft", "hard"}))
        ->capture_default_str();
    cmd->add_flag("--per-component", f.per_component,
                  "threshold real/imaginary parts separately instead of magnitudes");
    cmd->add_option("--known-sigma", f.known_sigma,
                    "pixel noise std when known; otherwise estimated from the finest subbands")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--bilateral-all-scales", f.all_scales,
                  "also bilateral-filter the intermediate lowpass planes");
}

DenoiseParams to_params(const DenoiseFlags& f) {
    DenoiseParams p;
    p.levels = f.levels;
    p.sigma_s = f.sigma_s;
    if (f.sigma_r > 0.0) p.sigma_r = f.sigma_r;
    p.sigma_r_mult = f.sigma_r_mult;
    p.radius = f.radius;
    p.rule.kind = f.rule == "universal" ? ThresholdKind::universal : ThresholdKind::bayes;
    p.rule.mode = f.mode == "hard" ? ThresholdMode::hard : ThresholdMode::soft;
    p.rule.per_component = f.per_component;
    if (f.known_sigma >= 0.0) p.known_sigma_n = f.known_sigma;
    p.bilateral_all_scales = f.all_scales;
    return p;
}

std::vector<std::string> list_pgm_files(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (ext == ".pgm" || ext == ".pnm") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

// Affine map of a subband plane to the 8-bit range for visual inspection.
Image normalize_for_export(const RealGrid& g) {
    double lo = g.v.empty() ? 0.0 : g.v[0], hi = lo;
    for (double v : g.v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;
    Image out(g.width, g.height, 0.0, 255.0);
    for (std::size_t i = 0; i < g.v.size(); ++i)
        out.pixels[i] = span > 0.0 ? (g.v[i] - lo) / span * 255.0 : 0.0;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-tree complex wavelet + bilateral grayscale denoiser"};
    app.require_subcommand(1);

    // ---- add-noise ----
    std::string an_input, an_output;
    double an_sigma = 0.0;
    std::uint64_t an_seed = 1;
    auto* an = app.add_subcommand("add-noise", "add seeded white Gaussian noise to a PGM image");
    an->add_option("-i,--input", an_input, "input PGM")->required();
    an->add_option("-o,--output", an_output, "output PGM")->required();
    an->add_option("--sigma", an_sigma, "noise standard deviation")
        ->required()
        ->check(CLI::NonNegativeNumber);
    an->add_option("--seed", an_seed, "PRNG seed")->capture_default_str();

    // ---- denoise ----
    std::string dn_input, dn_output;
    DenoiseFlags dn_flags;
    bool dn_print_params = false;
    auto* dn = app.add_subcommand("denoise", "denoise a PGM image");
    dn->add_option("-i,--input", dn_input, "input PGM")->required();
    dn->add_option("-o,--output", dn_output, "output PGM")->required();
    add_denoise_flags(dn, dn_flags);
    dn->add_flag("--print-params", dn_print_params,
                 "print every resolved parameter value (always on; accepted for scripts)");

    // ---- psnr ----
    std::string ps_ref, ps_test;
    auto* ps = app.add_subcommand("psnr", "peak signal-to-noise ratio between two images");
    ps->add_option("reference", ps_ref, "reference PGM")->required();
    ps->add_option("test", ps_test, "test PGM")->required();

    // ---- bench ----
    std::string be_dir, be_csv, be_table;
    std::vector<double> be_sigmas;
    std::vector<std::uint64_t> be_seeds;
    std::vector<std::string> be_methods;
    bool be_sigma60 = false, be_compare_paper = false;
    int be_threads = 1;
    DenoiseFlags be_flags;
    auto* be = app.add_subcommand("bench", "PSNR benchmark over a directory of images");
    be->add_option("--images", be_dir, "directory of PGM images")->required();
    be->add_option("--sigma", be_sigmas, "noise levels (default 10 20 30 40 50)");
    be->add_flag("--include-sigma-60", be_sigma60, "append sigma 60 to the default list");
    be->add_option("--seeds", be_seeds, "seed list (default 1 2 3 4 5)");
    be->add_option("--method", be_methods,
                   "methods: noisy, proposed, bilateral-only, threshold-only, mres-bilateral");
    be->add_option("--csv", be_csv, "write machine-readable CSV here");
    be->add_option("--table", be_table, "write the aligned text table here (default stdout)");
    be->add_flag("--compare-paper", be_compare_paper,
                 "print the published reference PSNR beside measured values");
    be->add_option("--threads", be_threads, "worker threads")->check(CLI::PositiveNumber);
    add_denoise_flags(be, be_flags);

    // ---- transform-dump ----
    std::string td_input, td_output;
    int td_level = 1, td_band = 4, td_residue = -1, td_levels = 2;
    std::string td_part = "magnitude";
    auto* td = app.add_subcommand("transform-dump", "export a subband as a normalized PGM");
    td->add_option("-i,--input", td_input, "input PGM")->required();
    td->add_option("-o,--output", td_output, "output PGM")->required();
    td->add_option("--levels", td_levels, "decomposition levels")->check(CLI::Range(1, 5));
    td->add_option("--level", td_level, "level to dump (1 = finest)")->check(CLI::PositiveNumber);
    td->add_option("--band", td_band, "band index 0-5 (+15,-15,+75,-75,+45,-45)")
        ->check(CLI::Range(0, 5));
    td->add_option("--part", td_part, "real, imag, or magnitude")
        ->check(CLI::IsMember({"real", "imag", "magnitude"}));
    td->add_option("--residue", td_residue, "dump lowpass residue plane 0-3 instead")
        ->check(CLI::Range(0, 3));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*an) {
            Image img = load_pgm(an_input);
            save_pgm(add_awgn(img, {an_sigma, an_seed}), an_output);
            return 0;
        }
        if (*dn) {
            Image img = load_pgm(dn_input);
            ResolvedSettings rs;
            Image out = denoise(img, to_params(dn_flags), &rs);
            save_pgm(out, dn_output);
            (void)dn_print_params;  // the resolved values are always printed
            std::printf(
                "levels=%d sigma_s=%g sigma_r=%g radius=%d rule=%s mode=%s target=%s sigma_n=%g (%s)\n",
                rs.levels, rs.sigma_s, rs.sigma_r, rs.radius,
                rs.rule.kind == ThresholdKind::bayes ? "bayes" : "universal",
                rs.rule.mode == ThresholdMode::soft ? "soft" : "hard",
                rs.rule.per_component ? "components" : "magnitude",
                rs.sigma_n_pixel, rs.blind ? "estimated" : "known");
            return 0;
        }
        if (*ps) {
            Image ref = load_pgm(ps_ref);
            Image test = load_pgm(ps_test);
            const double v = psnr(ref, test);
            if (std::isinf(v))
                std::printf("inf\n");
            else
                std::printf("%.4f\n", v);
            return 0;
        }
        if (*be) {
            BenchConfig cfg;
            cfg.image_paths = list_pgm_files(be_dir);
            if (cfg.image_paths.empty()) {
                std::fprintf(stderr, "bench: no PGM images in '%s'\n", be_dir.c_str());
                return 1;
            }
            if (!be_sigmas.empty()) cfg.sigmas = be_sigmas;
            if (be_sigma60) cfg.sigmas.push_back(60.0);
            if (!be_seeds.empty()) cfg.seeds = be_seeds;
            if (!be_methods.empty()) cfg.methods = be_methods;
            cfg.compare_paper = be_compare_paper;
            cfg.threads = be_threads;
            cfg.base = to_params(be_flags);
            BenchReport report = run_bench(cfg);

            if (!be_csv.empty()) {
                std::ofstream csv(be_csv, std::ios::binary | std::ios::trunc);
                if (!csv) {
                    std::fprintf(stderr, "bench: cannot write '%s'\n", be_csv.c_str());
                    return 1;
                }
                write_csv(report, csv);
            }
            const std::string table = format_table(report);
            if (!be_table.empty()) {
                std::ofstream tf(be_table, std::ios::binary | std::ios::trunc);
                if (!tf) {
                    std::fprintf(stderr, "bench: cannot write '%s'\n", be_table.c_str());
                    return 1;
                }
                tf << table;
            } else {
                std::cout << table;
            }
            // non-fatal sanity note: PSNR should not improve as noise grows
            for (const auto& a : report.rows)
                for (const auto& b : report.rows)
                    if (a.image == b.image && a.method == b.method && a.sigma < b.sigma &&
                        b.psnr_db > a.psnr_db + 1e-9)
                        std::fprintf(stderr,
                                     "warning: %s/%s PSNR rises from sigma %g to %g\n",
                                     a.image.c_str(), a.method.c_str(), a.sigma, b.sigma);
            return 0;
        }
        if (*td) {
            Image img = load_pgm(td_input);
            Pyramid pyr = forward(img, td_levels);
            if (td_residue >= 0) {
                save_pgm(normalize_for_export(pyr.residue[td_residue]), td_output);
                return 0;
            }
            if (td_level < 1 || td_level > pyr.level_count()) {
                std::fprintf(stderr, "transform-dump: level %d out of range\n", td_level);
                return 1;
            }
            const ComplexGrid& band = pyr.levels[td_level - 1].bands[td_band];
            RealGrid plane(band.width, band.height);
            for (std::size_t i = 0; i < band.count(); ++i) {
                if (td_part == "real")
                    plane.v[i] = band.re[i];
                else if (td_part == "imag")
                    plane.v[i] = band.im[i];
                else
                    plane.v[i] = std::hypot(band.re[i], band.im[i]);
            }
            save_pgm(normalize_for_export(plane), td_output);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
