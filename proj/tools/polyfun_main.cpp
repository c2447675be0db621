// polyfun: classify null-ideal sets of finite rings, scan subsets of
// integer matrix algebras for ringset obstructions, verify the closure
// theorems, and search ring corpora for counterexamples to the open
// questions. Emits JSON-Lines records.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "polyfun/errors.hpp"
#include "polyfun/framework.hpp"
#include "polyfun/ivp.hpp"
#include "polyfun/report.hpp"
#include "polyfun/ringspec_io.hpp"

namespace {

using namespace polyfun;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCap = 2;
constexpr int kExitInternal = 3;
constexpr int kExitFinding = 4;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs tasks 0..count-1 on `jobs` threads; results land in slot order, so
// output is deterministic regardless of scheduling.
std::vector<std::string> run_indexed(std::size_t count, unsigned jobs,
                                     const std::function<std::string(std::size_t)>& task) {
    std::vector<std::string> results(count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                results[i] = task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                failed.store(true);
                if (first_error.empty()) {
                    try {
                        throw;
                    } catch (const std::exception& e) {
                        first_error = e.what();
                    }
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error(first_error);
    return results;
}

struct Output {
    std::ofstream file;
    bool to_file = false;
    std::ostream& stream() { return to_file ? file : std::cout; }

    explicit Output(const std::string& path, bool append = false) {
        if (!path.empty() && path != "-") {
            file.open(path, append ? std::ios::app : std::ios::trunc);
            if (!file) throw ConfigError("cannot open output file: " + path);
            to_file = true;
        }
    }
};

std::string ring_id_of(const std::string& ring_arg) {
    if (!ring_arg.empty() && ring_arg[0] == '@') {
        fs::path p(ring_arg.substr(1));
        return p.stem().string();
    }
    return ring_arg;
}

Side parse_side(const std::string& s) {
    if (s == "right") return Side::kRight;
    if (s == "left") return Side::kLeft;
    throw ConfigError("side must be 'right' or 'left'");
}

std::string subset_arg_text(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ConfigError("cannot open subset file: " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

// --- classify ---

int cmd_classify(const std::string& ring_arg, const std::string& subset_arg, bool all_subsets,
                 bool conjugation_orbits, const std::string& side_arg, unsigned jobs,
                 const std::string& out_path, const Caps& caps) {
    FiniteRing ring = ring_by_name(ring_arg, caps);
    Side side = parse_side(side_arg);
    std::string ring_id = ring_id_of(ring_arg);

    std::vector<SubsetSpec> subsets;
    if (!subset_arg.empty()) {
        subsets.push_back(parse_subset(ring, subset_arg_text(subset_arg)));
    } else if (all_subsets) {
        mpz_class n = ring.size();
        if (n > mpz_class(static_cast<unsigned long>(caps.subset_exhaustion)))
            throw CapError("--all-subsets needs |R| <= " + std::to_string(caps.subset_exhaustion) +
                           ", got " + n.get_str());
        u64 count = n.get_ui();
        for (u64 mask = 0; mask < (u64{1} << count); ++mask) {
            std::vector<RingElement> xs;
            for (u64 i = 0; i < count; ++i)
                if (mask & (u64{1} << i)) xs.push_back(ring.element_at(i));
            subsets.emplace_back(ring, std::move(xs));
        }
    } else if (conjugation_orbits) {
        // Distinct conjugation orbits, then every union of orbits.
        u64 count = ring.element_count_checked(caps);
        std::vector<SubsetSpec> orbits;
        std::set<RingElement> seen;
        for (u64 i = 0; i < count; ++i) {
            RingElement x = ring.element_at(i);
            if (seen.count(x)) continue;
            SubsetSpec orbit = conjugation_closure(SubsetSpec(ring, {x}), caps);
            for (const auto& y : orbit.elements()) seen.insert(y);
            orbits.push_back(std::move(orbit));
        }
        if (orbits.size() > caps.subset_exhaustion)
            throw CapError("too many conjugation orbits for exhaustive unions");
        for (u64 mask = 0; mask < (u64{1} << orbits.size()); ++mask) {
            SubsetSpec u(ring, {});
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if (mask & (u64{1} << i)) u = u.united_with(orbits[i]);
            subsets.push_back(std::move(u));
        }
    } else {
        throw ConfigError("classify needs --subset, --all-subsets, or --conjugation-orbits");
    }

    Output out(out_path);
    auto lines = run_indexed(subsets.size(), jobs, [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        Classification c = classify_null_ideal_set(ring, subsets[i], side, caps);
        return classification_record(ring_id, subsets[i], c, elapsed_ms(t0)).dump();
    });
    std::size_t positive = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out.stream() << lines[i] << "\n";
        if (ordered_json::parse(lines[i])["null_ideal_set"].get<bool>()) ++positive;
    }
    ordered_json summary;
    summary["type"] = "summary";
    summary["ring"] = ring_id;
    summary["side"] = side_arg;
    summary["subsets"] = lines.size();
    summary["null_ideal_sets"] = positive;
    summary["non_null_ideal_sets"] = lines.size() - positive;
    out.stream() << summary.dump() << "\n";
    return kExitOk;
}

// --- scan-ringset ---

IntSubset parse_int_subset(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ConfigError(std::string("subset document: bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("family") || !doc.contains("n") ||
        !doc.contains("elements"))
        throw ConfigError("subset document needs fields 'family', 'n', 'elements'");
    AlgebraContext ctx;
    std::string family = doc["family"].get<std::string>();
    if (family == "full") ctx.family = MatrixFamily::kFull;
    else if (family == "triangular") ctx.family = MatrixFamily::kTriangular;
    else throw ConfigError("family must be 'full' or 'triangular'");
    ctx.n = doc["n"].get<unsigned>();
    if (ctx.n < 1 || ctx.n > 8) throw ConfigError("n out of range");
    std::vector<IntMat> elems;
    for (const auto& e : doc["elements"]) {
        if (!e.is_array() || e.size() != ctx.n) throw ConfigError("element is not an n x n matrix");
        IntMat a(ctx.n);
        for (unsigned i = 0; i < ctx.n; ++i) {
            if (!e[i].is_array() || e[i].size() != ctx.n)
                throw ConfigError("element is not an n x n matrix");
            for (unsigned j = 0; j < ctx.n; ++j) a.at(i, j) = static_cast<long>(e[i][j].get<i64>());
        }
        elems.push_back(std::move(a));
    }
    try {
        return IntSubset(ctx, std::move(elems));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

int cmd_scan_ringset(const std::string& subset_arg, const std::string& side_arg, u64 modulus_bound,
                     const std::string& out_path, const Caps& caps) {
    if (subset_arg.empty()) throw ConfigError("scan-ringset needs --subset");
    IntSubset subset = parse_int_subset(subset_arg_text(subset_arg));
    Side side = parse_side(side_arg);
    auto moduli = prime_powers_upto(modulus_bound);
    if (moduli.empty()) throw ConfigError("--modulus-bound must be at least 2");

    Output out(out_path);
    auto t0 = std::chrono::steady_clock::now();
    RingsetVerdict verdict = ringset_scan(subset, side, moduli, caps);
    out.stream() << ringset_record(subset, side, verdict, elapsed_ms(t0)).dump() << "\n";
    return kExitOk;
}

// --- search ---

int cmd_search(const std::string& corpus_dir, unsigned jobs, const std::string& out_path,
               const Caps& caps) {
    if (corpus_dir.empty()) throw ConfigError("search needs --corpus");
    if (!fs::is_directory(corpus_dir)) throw ConfigError("not a directory: " + corpus_dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    // Resume: skip ring ids already present in the results file.
    std::set<std::string> done;
    if (!out_path.empty() && fs::exists(out_path)) {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                ordered_json j = ordered_json::parse(line);
                if (j.contains("ring")) done.insert(j["ring"].get<std::string>());
            } catch (...) {
                // tolerate partial trailing lines from an interrupted run
            }
        }
    }
    std::vector<fs::path> todo;
    for (const auto& f : files)
        if (!done.count(f.stem().string())) todo.push_back(f);

    auto lines = run_indexed(todo.size(), jobs, [&](std::size_t i) -> std::string {
        std::string id = todo[i].stem().string();
        FiniteRing ring;
        try {
            ring = load_ring_spec_file(todo[i].string());
        } catch (const std::exception& e) {
            return search_skip_record(id, e.what()).dump();
        }
        auto t0 = std::chrono::steady_clock::now();
        SubsetSpec full = SubsetSpec::full(ring, caps);
        Classification right = classify_null_ideal_set(ring, full, Side::kRight, caps);
        Classification left = classify_null_ideal_set(ring, full, Side::kLeft, caps);
        // Any negative verdict here is a research finding: re-verify the
        // witness by direct evaluation before reporting it.
        for (const Classification* c : {&right, &left}) {
            if (c->is_null_ideal_set) continue;
            const ClosureWitness& w = *c->witness;
            Poly fb = mul_const_side(w.kernel_poly, w.constant, c->side);
            if (eval_side(fb, w.at, c->side) != w.value || w.value.is_zero())
                throw CheckFailed("search finding failed re-verification on ring " + id);
        }
        std::string status =
            right.is_null_ideal_set && left.is_null_ideal_set ? "consistent" : "finding";
        return search_record(id, status, right, left, elapsed_ms(t0)).dump();
    });

    Output out(out_path, /*append=*/true);
    bool found = false;
    for (const auto& line : lines) {
        out.stream() << line << "\n";
        ordered_json j = ordered_json::parse(line);
        if (j["status"] == "finding") found = true;
    }
    ordered_json summary;
    summary["type"] = "summary";
    summary["corpus"] = corpus_dir;
    summary["rings_processed"] = lines.size();
    summary["rings_skipped_resume"] = done.size();
    summary["findings"] = found;
    if (!out.to_file) out.stream() << summary.dump() << "\n";
    return found ? kExitFinding : kExitOk;
}

// --- verify-theorems ---

int cmd_verify_theorems(const std::string& ring_arg, unsigned trials, const std::string& out_path,
                        const Caps& caps) {
    FiniteRing ring = ring_by_name(ring_arg, caps);
    std::string ring_id = ring_id_of(ring_arg);
    Output out(out_path);

    // Units theorem over every union of conjugation orbits, both sides.
    u64 count = ring.element_count_checked(caps);
    std::vector<SubsetSpec> orbits;
    std::set<RingElement> seen;
    for (u64 i = 0; i < count; ++i) {
        RingElement x = ring.element_at(i);
        if (seen.count(x)) continue;
        SubsetSpec orbit = conjugation_closure(SubsetSpec(ring, {x}), caps);
        for (const auto& y : orbit.elements()) seen.insert(y);
        orbits.push_back(std::move(orbit));
    }
    if (orbits.size() > 20) throw CapError("too many conjugation orbits for the battery");
    for (Side side : {Side::kRight, Side::kLeft}) {
        for (u64 mask = 1; mask < (u64{1} << orbits.size()); ++mask) {
            SubsetSpec u(ring, {});
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if (mask & (u64{1} << i)) u = u.united_with(orbits[i]);
            PolContext ctx = PolContext::null_context(ring, u, side);
            auto t0 = std::chrono::steady_clock::now();
            TheoremReport rep = units_theorem_check(ctx, exact_degree(ctx, caps), caps);
            out.stream() << theorem_record(ring_id, "units_over_center", u, side, rep,
                                           elapsed_ms(t0)).dump()
                         << "\n";
        }
    }

    // Images criterion on random contexts; a violation aborts loudly.
    std::mt19937_64 rng(20250810);
    for (unsigned t = 0; t < trials; ++t) {
        std::vector<RingElement> elems;
        std::size_t sz = 1 + rng() % 3;
        for (std::size_t i = 0; i < sz; ++i) elems.push_back(ring.element_at(rng() % count));
        SubsetSpec s(ring, std::move(elems));
        Side side = (rng() & 1) ? Side::kRight : Side::kLeft;
        PolContext ctx = PolContext::null_context(ring, s, side);
        std::vector<Poly> cs;
        std::size_t cn = 1 + rng() % 2;
        for (std::size_t i = 0; i < cn; ++i) {
            std::vector<RingElement> coeffs;
            std::size_t deg = rng() % 4;
            for (std::size_t k = 0; k <= deg; ++k) coeffs.push_back(ring.element_at(rng() % count));
            cs.push_back(Poly(ring, std::move(coeffs)));
        }
        auto t0 = std::chrono::steady_clock::now();
        TheoremReport rep = images_criterion_check(ctx, cs, exact_degree(ctx, caps));
        if (t < 8) // keep the record stream small; violations throw regardless
            out.stream() << theorem_record(ring_id, "images_criterion", s, side, rep,
                                           elapsed_ms(t0)).dump()
                         << "\n";
    }

    ordered_json summary;
    summary["type"] = "summary";
    summary["ring"] = ring_id;
    summary["units_theorem_contexts"] = (u64{1} << orbits.size()) * 2 - 2;
    summary["images_criterion_trials"] = trials;
    summary["violations"] = 0;
    out.stream() << summary.dump() << "\n";
    return kExitOk;
}

// --- count-functions ---

int cmd_count_functions(const std::string& ring_arg, const std::string& side_arg,
                        const std::string& out_path, const Caps& caps) {
    FiniteRing ring = ring_by_name(ring_arg, caps);
    Side side = parse_side(side_arg);
    Output out(out_path);
    auto t0 = std::chrono::steady_clock::now();
    mpz_class count = count_poly_functions(ring, side, caps);
    out.stream() << count_record(ring_id_of(ring_arg), side, count, elapsed_ms(t0)).dump() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyfun: null ideals and integer-valued polynomials on "
                 "non-commutative rings"};
    app.require_subcommand(1);

    std::string ring_arg, subset_arg, side_arg = "right", out_path, corpus_dir;
    bool all_subsets = false, conjugation_orbits = false;
    unsigned jobs = 1, trials = 200;
    u64 modulus_bound = 16;
    unsigned degree_cap = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file for JSON-Lines records (default stdout)");
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_option("--degree-cap", degree_cap, "override the kernel degree cap");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify null-ideal sets");
    classify->add_option("--ring", ring_arg, "builtin ring name or @spec.json")->required();
    classify->add_option("--subset", subset_arg, "subset expression or @file");
    classify->add_flag("--all-subsets", all_subsets, "classify every subset of the ring");
    classify->add_flag("--conjugation-orbits", conjugation_orbits,
                       "classify every union of unit-conjugation orbits");
    classify->add_option("--side", side_arg, "right or left");
    add_common(classify);

    CLI::App* scan = app.add_subcommand("scan-ringset", "scan an integer-matrix subset for "
                                                        "ringset obstructions");
    scan->add_option("--subset", subset_arg, "subset document (JSON or @file)")->required();
    scan->add_option("--side", side_arg, "right or left");
    scan->add_option("--modulus-bound", modulus_bound, "scan prime powers up to this bound");
    add_common(scan);

    CLI::App* search = app.add_subcommand("search", "classify S = R for every ring spec in a "
                                                    "corpus directory");
    search->add_option("--corpus", corpus_dir, "directory of ring-spec .json files")->required();
    add_common(search);

    CLI::App* verify = app.add_subcommand("verify-theorems", "run the closure-theorem battery");
    verify->add_option("--ring", ring_arg, "builtin ring name or @spec.json")->required();
    verify->add_option("--trials", trials, "randomized images-criterion trials");
    add_common(verify);

    CLI::App* countf = app.add_subcommand("count-functions", "count distinct polynomial "
                                                             "functions on a ring");
    countf->add_option("--ring", ring_arg, "builtin ring name or @spec.json")->required();
    countf->add_option("--side", side_arg, "right or left");
    add_common(countf);

    CLI11_PARSE(app, argc, argv);

    try {
        Caps caps = caps_from_env(default_caps());
        if (degree_cap > 0) caps.degree = degree_cap;

        if (app.got_subcommand(classify))
            return cmd_classify(ring_arg, subset_arg, all_subsets, conjugation_orbits, side_arg,
                                jobs, out_path, caps);
        if (app.got_subcommand(scan))
            return cmd_scan_ringset(subset_arg, side_arg, modulus_bound, out_path, caps);
        if (app.got_subcommand(search)) return cmd_search(corpus_dir, jobs, out_path, caps);
        if (app.got_subcommand(verify))
            return cmd_verify_theorems(ring_arg, trials, out_path, caps);
        if (app.got_subcommand(countf))
            return cmd_count_functions(ring_arg, side_arg, out_path, caps);
        return kExitConfig;
    } catch (const CheckFailed& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitInternal;
    } catch (const CapError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
