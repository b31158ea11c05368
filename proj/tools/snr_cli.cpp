// Command-line front end: lattice enumeration and DOT export, extremal
// weight functions, constructive synthesis, verification sweeps, and the
// subset-sum census.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "snr/census.hpp"
#include "snr/dot.hpp"
#include "snr/json_io.hpp"
#include "snr/synthesis.hpp"
#include "snr/weight.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    return file;
}

int cmd_gen(int n, int r, const std::string& format, const std::string& color_by,
            const std::string& map_file, const std::string& out_path, int max_n) {
    const snr::Shape shape(n, r);
    const snr::LatticeUniverse universe(shape, max_n);

    std::optional<snr::BooleanMap> map;
    if (!map_file.empty()) {
        std::ifstream in(map_file);
        if (!in) throw CLI::ValidationError("--map-file", "cannot open " + map_file);
        snr::Json j;
        in >> j;
        map = snr::map_from_json(universe, j);
    }
    if (color_by == "map" && !map)
        throw CLI::ValidationError("--color-by", "map coloring requires --map-file");

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (format == "text") {
        for (std::size_t i = 0; i < universe.size(); ++i)
            out << snr::render_string(universe.at(i)) << '\n';
    } else if (format == "json") {
        snr::Json j;
        j["n"] = n;
        j["r"] = r;
        j["elements"] = snr::Json::array();
        for (std::size_t i = 0; i < universe.size(); ++i)
            j["elements"].push_back(snr::render_string(universe.at(i)));
        j["edges"] = snr::Json::array();
        for (const auto& [lo, hi] : universe.cover_edges())
            j["edges"].push_back({lo, hi});
        out << j.dump(2) << '\n';
    } else {
        snr::write_dot(out, universe,
                       color_by == "map" ? snr::ColorBy::kMap : snr::ColorBy::kRegions,
                       map ? &*map : nullptr);
    }
    return kExitOk;
}

int cmd_extremes(int n, int r, const std::string& which) {
    const snr::Shape shape(n, r);
    shape.require_mixed();
    const bool minimum = (which == "min");
    const snr::WeightFunction wf = minimum ? snr::minimizer(shape) : snr::maximizer(shape);
    const std::int64_t expected = minimum ? snr::gamma_bound(shape) : snr::eta_bound(shape);
    const std::int64_t count = snr::alpha(wf);

    std::cout << snr::weight_to_json(wf).dump() << '\n';
    std::cout << "alpha = " << count << ", closed form = " << expected << '\n';
    if (count != expected) {
        std::cout << "FAIL: alpha does not match the closed form\n";
        return kExitVerificationFailure;
    }
    std::cout << "PASS\n";
    return kExitOk;
}

int cmd_synth(int n, int r, std::int64_t q, bool with_basis, bool verify,
              const std::string& emit_path) {
    const snr::Shape shape(n, r);
    const snr::LatticeUniverse universe(shape);
    const snr::Synthesis synthesis = snr::synthesize(universe, q, with_basis);

    std::cout << "q = " << q << ", positive count = " << synthesis.map.positive_count()
              << ", case = " << snr::synth_case_name(synthesis.kind) << '\n';
    if (with_basis) {
        if (synthesis.basis)
            std::cout << "basis: " << snr::basis_to_json(*synthesis.basis).dump() << '\n';
        else
            std::cout << "basis: not applicable (extremal q)\n";
    }

    if (!emit_path.empty()) {
        snr::Json j;
        j["map"] = snr::map_to_json(universe, synthesis.map);
        j["decomposition"] = snr::decomposition_to_json(synthesis);
        if (synthesis.basis) j["basis"] = snr::basis_to_json(*synthesis.basis);
        std::ofstream out(emit_path);
        if (!out) throw CLI::ValidationError("--emit", "cannot open " + emit_path);
        out << j.dump(2) << '\n';
    }

    if (verify) {
        const snr::SynthesisReport report = snr::verify_synthesis(universe, q);
        for (const std::string& note : report.notes) std::cout << "  " << note << '\n';
        std::cout << (report.all_pass() ? "PASS" : "FAIL") << ": verification\n";
        if (!report.all_pass()) return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_verify(int n, int r, bool q_sweep, int samples, std::uint64_t seed) {
    const snr::Shape shape(n, r);
    shape.require_mixed();
    const snr::LatticeUniverse universe(shape);
    bool ok = true;

    const snr::RegionReport regions = snr::check_region_properties(universe);
    std::cout << (regions.all_pass() ? "PASS" : "FAIL") << ": sublattice properties i-v\n";
    ok &= regions.all_pass();

    const bool min_ok = snr::alpha(snr::minimizer(shape)) == snr::gamma_bound(shape);
    const bool max_ok = snr::alpha(snr::maximizer(shape)) == snr::eta_bound(shape);
    std::cout << (min_ok && max_ok ? "PASS" : "FAIL") << ": extremal counts "
              << snr::gamma_bound(shape) << " / " << snr::eta_bound(shape) << '\n';
    ok &= min_ok && max_ok;

    if (q_sweep) {
        const std::int64_t lo = snr::gamma_bound(shape);
        const std::int64_t hi = snr::eta_bound(shape);
        const std::int64_t total = hi - lo + 1;
        std::vector<char> pass(static_cast<std::size_t>(total), 0);
        const unsigned workers =
            std::max(1u, std::min(std::thread::hardware_concurrency(),
                                  static_cast<unsigned>(total)));
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (std::int64_t i = next++; i < total; i = next++)
                pass[static_cast<std::size_t>(i)] =
                    snr::verify_synthesis(universe, lo + i).all_pass() ? 1 : 0;
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();

        std::int64_t passed = 0;
        for (std::int64_t i = 0; i < total; ++i) {
            if (pass[static_cast<std::size_t>(i)])
                ++passed;
            else
                std::cout << "  q = " << lo + i << " failed\n";
        }
        std::cout << (passed == total ? "PASS" : "FAIL") << ": q-sweep " << passed << '/'
                  << total << '\n';
        ok &= (passed == total);
    }

    if (samples > 0) {
        std::mt19937_64 rng(seed);
        int within = 0;
        for (int i = 0; i < samples; ++i) {
            const snr::WeightFunction wf = snr::sample_random(shape, rng());
            const std::int64_t count =
                snr::count_nonneg_subsets_mitm(snr::RealMultiset{wf.all_values()});
            if (count >= snr::gamma_bound(shape) && count <= snr::eta_bound(shape)) ++within;
        }
        std::cout << (within == samples ? "PASS" : "FAIL") << ": random samples " << within
                  << '/' << samples << " within [" << snr::gamma_bound(shape) << ", "
                  << snr::eta_bound(shape) << "]\n";
        ok &= (within == samples);
    }

    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_census(const std::string& values_text, bool expect_range) {
    const snr::RealMultiset multiset{snr::parse_rational_list(values_text)};
    const snr::Signature sig = snr::classify_signature(multiset);
    const std::int64_t naive = snr::count_nonneg_subsets_naive(multiset);
    const std::int64_t mitm = snr::count_nonneg_subsets_mitm(multiset);

    std::cout << "n = " << sig.n << ", r = " << sig.r << ", in_W = "
              << (sig.in_w ? "true" : "false") << '\n';
    std::cout << "count_naive = " << naive << ", count_mitm = " << mitm << '\n';
    if (naive != mitm) {
        std::cout << "FAIL: counters disagree\n";
        return kExitVerificationFailure;
    }
    bool in_range = true;
    if (sig.in_w && sig.r > 0 && sig.r < sig.n) {
        const snr::Shape shape(sig.n, sig.r);
        std::cout << "range = [" << snr::gamma_bound(shape) << ", " << snr::eta_bound(shape)
                  << "]";
        if (naive == snr::gamma_bound(shape)) std::cout << ", position = minimum";
        if (naive == snr::eta_bound(shape)) std::cout << ", position = maximum";
        std::cout << '\n';
        in_range = naive >= snr::gamma_bound(shape) && naive <= snr::eta_bound(shape);
    }
    if (expect_range && !in_range) {
        std::cout << "FAIL: count outside the expected range\n";
        return kExitVerificationFailure;
    }
    return kExitOk;
}

int cmd_rank_levels(int n, int r) {
    const snr::Shape shape(n, r);
    const snr::LatticeUniverse universe(shape);
    const snr::LevelDecomposition d = snr::rank_levels(universe);
    std::cout << "R = " << d.R << '\n';
    std::cout << "betas =";
    for (std::int64_t b : d.betas) std::cout << ' ' << b;
    std::cout << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice of signed-index strings: enumeration, boolean-map synthesis "
                 "and non-negative subset-sum census"};
    app.require_subcommand(1);

    int n = 0, r = 0;
    std::int64_t q = 0;
    std::string format = "text", color_by = "regions", map_file, out_path, emit_path;
    std::string which, values_text;
    bool with_basis = false, verify_flag = false, q_sweep = false, expect_range = false;
    int samples = 0;
    std::uint64_t seed = 1;
    int max_n = snr::kDefaultMaxN;

    auto* gen = app.add_subcommand("gen", "enumerate S(n,r), optionally as JSON or DOT");
    gen->add_option("n", n)->required();
    gen->add_option("r", r)->required();
    gen->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
    gen->add_option("--color-by", color_by)->check(CLI::IsMember({"regions", "map"}));
    gen->add_option("--map-file", map_file);
    gen->add_option("--out", out_path);
    gen->add_option("--max-n", max_n);

    auto* extremes = app.add_subcommand("extremes", "extremal weight functions and counts");
    extremes->add_option("n", n)->required();
    extremes->add_option("r", r)->required();
    extremes->add_option("which", which)->required()->check(CLI::IsMember({"min", "max"}));

    auto* synth = app.add_subcommand("synth", "boolean map with exactly q positive values");
    synth->add_option("n", n)->required();
    synth->add_option("r", r)->required();
    synth->add_option("q", q)->required();
    synth->add_flag("--with-basis", with_basis);
    synth->add_flag("--verify", verify_flag);
    synth->add_option("--emit", emit_path);

    auto* verify = app.add_subcommand("verify", "verification sweep for one shape");
    verify->add_option("n", n)->required();
    verify->add_option("r", r)->required();
    verify->add_flag("--q-sweep", q_sweep);
    verify->add_option("--samples", samples);
    verify->add_option("--seed", seed);

    auto* census = app.add_subcommand("census", "count non-negative subset sums");
    census->add_option("values", values_text)->required();
    census->add_flag("--expect-range", expect_range);

    auto* levels = app.add_subcommand("rank-levels", "rank levels of the middle sublattice");
    levels->add_option("n", n)->required();
    levels->add_option("r", r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(n, r, format, color_by, map_file, out_path, max_n);
        if (*extremes) return cmd_extremes(n, r, which);
        if (*synth) return cmd_synth(n, r, q, with_basis, verify_flag, emit_path);
        if (*verify) return cmd_verify(n, r, q_sweep, samples, seed);
        if (*census) return cmd_census(values_text, expect_range);
        if (*levels) return cmd_rank_levels(n, r);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
