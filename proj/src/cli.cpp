// Copyright 2026 The Werner Diagrams Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "werner/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "werner/analysis.hpp"
#include "werner/diagrams.hpp"
#include "werner/pauli.hpp"
#include "werner/stabilizer.hpp"
#include "werner/suite.hpp"

namespace werner::cli {

namespace {

using nlohmann::json;

constexpr size_t kMixedCap = 6;
constexpr size_t kConjectureCap = 5;
constexpr size_t kPureCap = 12;

struct Globals {
    std::string format;
    uint64_t seed = kDefaultSeed;
    double tol = 0;  // 0 means "command default"
    std::string out_path;
    bool force = false;
};

struct Selector {
    bool singlet = false;
    std::string chord;
    std::string cyclic;
    size_t cn = 0;
    std::string diagram;
    std::string sym;
    std::string radial;
    std::string in_path;

    void add_to(CLI::App *app, bool with_input) {
        app->add_flag("--singlet", singlet, "two-qubit singlet");
        app->add_option("--chord", chord, "chord-diagram state, e.g. \"1 4 | 2 3\"");
        app->add_option("--cyclic", cyclic, "cyclic state C(I), e.g. 001");
        app->add_option("--cn", cn, "mixed C_n state");
        app->add_option("--diagram", diagram, "polygon diagram state, e.g. \"1 2 4 | 3 | 5\"");
        app->add_option("--sym", sym, "symmetrized Pauli word n1,n2,n3,n");
        app->add_option("--radial", radial, "radial element m,n");
        if (with_input) {
            app->add_option("--in", in_path, "state JSON file");
        }
    }
};

std::vector<size_t> parse_list(const std::string &text, size_t expected, const std::string &flag) {
    std::vector<size_t> values;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view item(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw std::invalid_argument(flag + ": expected " + std::to_string(expected) +
                                        " comma-separated non-negative integers, got '" + text + "'");
        }
        values.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (values.size() != expected) {
        throw std::invalid_argument(flag + ": expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(values.size()));
    }
    return values;
}

void check_cap(size_t n, size_t cap, bool force, const std::string &what) {
    if (n == 0) {
        throw std::invalid_argument(what + ": n must be at least 1");
    }
    if (n > cap && !force) {
        throw std::invalid_argument(what + ": n = " + std::to_string(n) + " exceeds the safety cap of " +
                                    std::to_string(cap) + " (memory and time grow as 4^n); pass --force to run anyway");
    }
}

json complex_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from(const json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("state JSON: complex entries must be numbers or [re, im] pairs");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

LoadedState build_state(const Selector &sel, const Globals &g, bool mixed_only) {
    int chosen = sel.singlet + !sel.chord.empty() + !sel.cyclic.empty() + (sel.cn > 0) + !sel.diagram.empty() +
                 !sel.sym.empty() + !sel.radial.empty() + !sel.in_path.empty();
    if (chosen != 1) {
        throw std::invalid_argument("exactly one state selector is required (--singlet, --chord, --cyclic, --cn, "
                                    "--diagram, --sym, --radial" +
                                    std::string(mixed_only ? ", --in" : "") + ")");
    }
    LoadedState s;
    auto pure_cap = mixed_only ? kMixedCap : kPureCap;
    if (sel.singlet) {
        s.kind = "pure";
        s.label = "singlet";
        s.pure = singlet();
    } else if (!sel.chord.empty()) {
        Partition p = parse_partition(sel.chord);
        check_cap(p.n(), pure_cap, g.force, "--chord");
        Matching m(p);
        s.kind = "pure";
        s.label = "chord " + m.to_string();
        s.pure = chord_state(m);
    } else if (!sel.cyclic.empty()) {
        BitString bits = BitString::parse(sel.cyclic);
        check_cap(bits.size(), pure_cap, g.force, "--cyclic");
        s.label = "cyclic " + bits.to_string();
        s.n = bits.size();
        auto c = cyclic_state(bits);
        if (c) {
            s.kind = "pure";
            s.pure = *c;
        } else {
            s.kind = "zero";
        }
    } else if (sel.cn > 0) {
        check_cap(sel.cn, kMixedCap, g.force, "--cn");
        s.kind = "matrix";
        s.label = "C_" + std::to_string(sel.cn);
        s.density = cn_density(sel.cn);
    } else if (!sel.diagram.empty()) {
        Partition p = parse_partition(sel.diagram);
        check_cap(p.n(), kMixedCap, g.force, "--diagram");
        s.kind = "matrix";
        s.label = "diagram " + p.to_string();
        s.density = diagram_density(p);
    } else if (!sel.sym.empty()) {
        auto v = parse_list(sel.sym, 4, "--sym");
        check_cap(v[3], kMixedCap, g.force, "--sym");
        s.kind = "matrix";
        s.label = "sym " + sel.sym;
        s.density = sym_element(v[0], v[1], v[2], v[3]);
    } else if (!sel.radial.empty()) {
        auto v = parse_list(sel.radial, 2, "--radial");
        check_cap(v[1], kMixedCap, g.force, "--radial");
        s.kind = "matrix";
        s.label = "radial " + sel.radial;
        s.density = radial_element(v[0], v[1]);
    } else {
        std::ifstream in(sel.in_path);
        if (!in) {
            throw std::invalid_argument("cannot open state file '" + sel.in_path + "'");
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error &e) {
            throw std::invalid_argument("state file '" + sel.in_path + "' is not valid JSON: " + e.what());
        }
        s = state_from_json(j);
        check_cap(s.n, kMixedCap, g.force, "--in");
    }
    if (s.pure) {
        s.n = s.pure->n;
        if (mixed_only && s.density.rows() == 0) {
            s.density = s.pure->density();
        }
    } else if (s.kind != "zero") {
        s.n = qubit_count(s.density.rows());
    } else if (mixed_only && s.density.rows() == 0) {
        s.density = CMatrix(pow2(s.n), pow2(s.n));
    }
    return s;
}

class Output {
   public:
    Output(const std::string &path, std::ostream &fallback) : target_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::invalid_argument("cannot open output file '" + path + "'");
            }
            target_ = &file_;
        }
    }
    std::ostream &stream() {
        return *target_;
    }

   private:
    std::ofstream file_;
    std::ostream *target_;
};

json stamp(json j) {
    j["schema_version"] = kSchemaVersion;
    return j;
}

void emit_json(const json &j, const Globals &g, std::ostream &out) {
    Output o(g.out_path, out);
    o.stream() << stamp(j).dump(2) << '\n';
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed, const std::string &cmd) {
    for (const char *a : allowed) {
        if (format == a) {
            return;
        }
    }
    std::string list;
    for (const char *a : allowed) {
        list += (list.empty() ? "" : ", ") + std::string(a);
    }
    throw std::invalid_argument(cmd + ": unsupported --format '" + format + "' (choose " + list + ")");
}

std::string csv_number(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

// ---- commands ---------------------------------------------------------

int cmd_enumerate(bool matchings, bool partitions, size_t n, const Globals &g, std::ostream &out) {
    if (matchings == partitions) {
        throw std::invalid_argument("enumerate: choose exactly one of --matchings or --partitions");
    }
    check_cap(n, kPureCap, g.force, "enumerate");
    std::string format = g.format.empty() ? "text" : g.format;
    require_format(format, {"text", "json"}, "enumerate");
    std::vector<std::string> lines;
    if (matchings) {
        if (n % 2) {
            throw std::invalid_argument("enumerate --matchings: n must be even");
        }
        for (const auto &m : enumerate_noncrossing_matchings(static_cast<int>(n))) {
            lines.push_back(m.to_string());
        }
    } else {
        for (const auto &p : enumerate_noncrossing_partitions(static_cast<int>(n))) {
            lines.push_back(p.to_string());
        }
    }
    if (format == "json") {
        emit_json({{"n", n}, {"kind", matchings ? "matchings" : "partitions"}, {"count", lines.size()}, {"diagrams", lines}},
                  g, out);
    } else {
        Output o(g.out_path, out);
        for (const auto &l : lines) {
            o.stream() << l << '\n';
        }
    }
    return kExitOk;
}

int cmd_state(const Selector &sel, const Globals &g, std::ostream &out) {
    LoadedState s = build_state(sel, g, false);
    std::string format = g.format.empty() ? (s.pure ? "amps" : "matrix") : g.format;
    require_format(format, {"amps", "matrix", "pauli"}, "state");
    if (format != "amps" && s.n > kMixedCap && !g.force) {
        check_cap(s.n, kMixedCap, false, "state --format " + format);
    }
    emit_json(state_to_json(s, format), g, out);
    return kExitOk;
}

int cmd_check(const Selector &sel, size_t samples, const Globals &g, std::ostream &out) {
    LoadedState s = build_state(sel, g, true);
    std::string format = g.format.empty() ? "json" : g.format;
    require_format(format, {"json", "csv", "text"}, "check");
    double tol = g.tol > 0 ? g.tol : kDefaultResidualTol;
    if (format == "csv") {
        Output o(g.out_path, out);
        o.stream() << "index,eigenvalue\n";
        RVector ev = hermitian_eigenvalues(s.density);
        for (size_t k = 0; k < ev.size(); k++) {
            o.stream() << k << ',' << csv_number(ev[k]) << '\n';
        }
        return kExitOk;
    }
    WernerReport r = is_werner(s.density, tol, samples, g.seed);
    json j = r;
    j["label"] = s.label;
    if (s.pure) {
        j["pure_residual"] = pure_werner_residual(*s.pure);
    }
    if (format == "text") {
        Output o(g.out_path, out);
        o.stream() << s.label << ": residual " << csv_number(r.residual) << ", random check "
                   << csv_number(r.random_check_max) << ", " << (r.is_werner ? "Werner" : "not Werner") << '\n';
        return kExitOk;
    }
    emit_json(j, g, out);
    return kExitOk;
}

int cmd_dimension(size_t n, bool pure, const Globals &g, std::ostream &out) {
    check_cap(n, pure ? kPureCap : kMixedCap, g.force, "dimension");
    double rel_tol = g.tol > 0 ? g.tol : kDefaultRankTol;
    std::string format = g.format.empty() ? "json" : g.format;
    require_format(format, {"json", "text"}, "dimension");
    json j;
    if (pure) {
        size_t dim = pure_werner_dimension(n, rel_tol);
        j = {{"n", n}, {"pure_dim", dim}, {"catalan", n % 2 ? 0 : catalan(static_cast<int>(n / 2))}};
    } else {
        j = {{"n", n}, {"commutant_dim", commutant_dimension(n, rel_tol)}, {"catalan", catalan(static_cast<int>(n))}};
    }
    if (format == "text") {
        Output o(g.out_path, out);
        o.stream() << "n=" << n << " " << (pure ? "pure_dim=" : "commutant_dim=")
                   << j[pure ? "pure_dim" : "commutant_dim"].get<size_t>() << " catalan=" << j["catalan"].get<size_t>()
                   << '\n';
        return kExitOk;
    }
    emit_json(j, g, out);
    return kExitOk;
}

int cmd_conjecture(size_t n, const Globals &g, std::ostream &out) {
    check_cap(n, kConjectureCap, g.force, "conjecture");
    ConjectureOptions opts;
    opts.allow_large = g.force;
    if (g.tol > 0) {
        opts.rel_tol = g.tol;
    }
    std::string format = g.format.empty() ? "json" : g.format;
    require_format(format, {"json", "csv", "text"}, "conjecture");
    ConjectureReport r = conjecture_test(n, opts);
    Output o(g.out_path, out);
    if (format == "csv") {
        const CMatrix &gram = r.gram.gram;
        for (size_t i = 0; i < gram.rows(); i++) {
            for (size_t k = 0; k < gram.cols(); k++) {
                o.stream() << (k ? "," : "") << csv_number(gram(i, k).real());
            }
            o.stream() << '\n';
        }
    } else if (format == "text") {
        o.stream() << "n=" << n << " diagrams=" << r.num_diagrams << " gram_rank=" << r.gram_rank
                   << " catalan=" << r.catalan << " commutant_dim=" << r.commutant_dim << " verdict "
                   << to_string(r.verdict) << '\n';
    } else {
        o.stream() << stamp(json(r)).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_stabilizer(const std::string &text, bool pure, const Globals &g, std::ostream &out) {
    if (text.empty()) {
        throw std::invalid_argument("stabilizer: --terms is required");
    }
    std::vector<PartitionTerm> terms = parse_terms(text);
    size_t n = static_cast<size_t>(terms.front().diagram.n());
    check_cap(n, pure ? kPureCap : kMixedCap, g.force, "stabilizer");
    std::string format = g.format.empty() ? "json" : g.format;
    require_format(format, {"json"}, "stabilizer");
    double tol = g.tol > 0 ? g.tol : kDefaultResidualTol;
    json j;
    if (pure) {
        auto mterms = to_matching_terms(terms);
        j = pure_stabilizer_cross_check(mterms);
        j["mode"] = "pure";
        j["predicted_dim"] = 3 * glb_prediction(terms).num_blocks();
        j["glb"] = glb_prediction(terms).to_string();
    } else {
        j = stabilizer_conjecture_test(terms, tol);
        j["mode"] = "mixed";
    }
    emit_json(j, g, out);
    return kExitOk;
}

int cmd_twirl(const Selector &sel, size_t samples, const Globals &g, std::ostream &out) {
    LoadedState s = build_state(sel, g, true);
    std::string format = g.format.empty() ? "matrix" : g.format;
    require_format(format, {"matrix", "pauli"}, "twirl");
    CMatrix projected = twirl_project(s.density);
    json j{{"n", s.n},
           {"label", s.label},
           {"input_residual", werner_residual(s.density)},
           {"output_residual", werner_residual(projected)},
           {"distance", frobenius_norm(projected - s.density)}};
    if (samples > 0) {
        CMatrix mc = monte_carlo_twirl(s.density, samples, g.seed);
        j["monte_carlo"] = {{"samples", samples}, {"seed", g.seed}, {"deviation", frobenius_norm(mc - projected)}};
    }
    LoadedState t;
    t.kind = "matrix";
    t.n = s.n;
    t.label = "twirl of " + s.label;
    t.density = projected;
    j["state"] = state_to_json(t, format);
    emit_json(j, g, out);
    return kExitOk;
}

int cmd_suite(size_t samples, const Globals &g, std::ostream &out) {
    std::string format = g.format.empty() ? "text" : g.format;
    require_format(format, {"text", "json"}, "suite");
    SuiteOptions opts;
    opts.seed = g.seed;
    if (samples > 0) {
        opts.twirl_samples = samples;
    }
    auto results = run_suite(opts);
    bool all = std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
    Output o(g.out_path, out);
    if (format == "json") {
        json j{{"seed", g.seed}, {"passed", all}, {"checks", results}};
        o.stream() << stamp(j).dump(2) << '\n';
    } else {
        for (const auto &r : results) {
            o.stream() << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << "  ("
                       << std::fixed << std::setprecision(2) << r.seconds << " s)\n"
                       << std::defaultfloat << "        " << r.detail << '\n';
            for (const auto &f : r.findings) {
                o.stream() << "        finding: " << f << '\n';
            }
        }
        o.stream() << (all ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all ? kExitOk : kExitNumerical;
}

}  // namespace

json state_to_json(const LoadedState &s, const std::string &format) {
    json j{{"n", s.n}, {"label", s.label}};
    if (s.kind == "zero") {
        j["kind"] = "zero";
        return j;
    }
    if (format == "amps") {
        if (!s.pure) {
            throw std::invalid_argument("--format amps needs a pure state; use matrix or pauli");
        }
        json amps = json::array();
        for (const Complex &a : s.pure->amps) {
            amps.push_back(complex_json(a));
        }
        j["kind"] = "pure";
        j["amps"] = amps;
        return j;
    }
    CMatrix rho = s.pure ? s.pure->density() : s.density;
    if (format == "matrix") {
        json rows = json::array();
        for (size_t r = 0; r < rho.rows(); r++) {
            json row = json::array();
            for (size_t c = 0; c < rho.cols(); c++) {
                row.push_back(complex_json(rho(r, c)));
            }
            rows.push_back(row);
        }
        j["kind"] = "matrix";
        j["matrix"] = rows;
        return j;
    }
    if (format == "pauli") {
        j["kind"] = "pauli";
        j["pauli"] = expand(rho, s.n);
        return j;
    }
    throw std::invalid_argument("unknown state format '" + format + "'");
}

LoadedState state_from_json(const json &j) {
    try {
        LoadedState s;
        s.kind = j.at("kind").get<std::string>();
        s.n = j.at("n").get<size_t>();
        s.label = j.value("label", std::string("input"));
        if (s.n == 0 || s.n > 2 * kPureCap) {
            throw std::invalid_argument("state JSON: n out of range");
        }
        size_t dim = pow2(s.n);
        if (s.kind == "zero") {
            s.density = CMatrix(dim, dim);
        } else if (s.kind == "pure") {
            const json &amps = j.at("amps");
            if (!amps.is_array() || amps.size() != dim) {
                throw std::invalid_argument("state JSON: amps must have 2^n entries");
            }
            PureState psi{s.n, CVector(dim)};
            for (size_t k = 0; k < dim; k++) {
                psi.amps[k] = complex_from(amps[k]);
            }
            s.pure = psi;
        } else if (s.kind == "matrix") {
            const json &rows = j.at("matrix");
            if (!rows.is_array() || rows.size() != dim) {
                throw std::invalid_argument("state JSON: matrix must have 2^n rows");
            }
            s.density = CMatrix(dim, dim);
            for (size_t r = 0; r < dim; r++) {
                if (!rows[r].is_array() || rows[r].size() != dim) {
                    throw std::invalid_argument("state JSON: matrix rows must have 2^n entries");
                }
                for (size_t c = 0; c < dim; c++) {
                    s.density(r, c) = complex_from(rows[r][c]);
                }
            }
            if (hermiticity_defect(s.density) > 1e-10 * std::max(1.0, frobenius_norm(s.density))) {
                throw std::invalid_argument("state JSON: matrix is not Hermitian");
            }
        } else if (s.kind == "pauli") {
            PauliVector v = j.at("pauli").get<PauliVector>();
            if (v.n != s.n) {
                throw std::invalid_argument("state JSON: pauli.n disagrees with n");
            }
            s.density = reconstruct(v);
        } else {
            throw std::invalid_argument("state JSON: unknown kind '" + s.kind + "'");
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("state JSON: ") + e.what());
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Werner states: diagram constructions, invariance checks and conjecture experiments", "werner"};
    app.require_subcommand(1);
    Globals g;
    auto add_globals = [&g](CLI::App *sub) {
        sub->add_option("--format", g.format, "output format");
        sub->add_option("--seed", g.seed, "random seed")->capture_default_str();
        sub->add_option("--tol", g.tol, "tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--out", g.out_path, "write the report to this file");
        sub->add_flag("--force", g.force, "lift the safety cap on n");
    };

    bool matchings = false;
    bool partitions = false;
    size_t n = 0;
    bool pure = false;
    size_t check_samples = 20;
    size_t twirl_samples = 0;
    size_t suite_samples = 0;
    std::string terms;
    Selector sel;

    auto *enumerate = app.add_subcommand("enumerate", "list non-crossing matchings or partitions");
    enumerate->add_flag("--matchings", matchings);
    enumerate->add_flag("--partitions", partitions);
    enumerate->add_option("--n", n)->required();
    add_globals(enumerate);

    auto *state = app.add_subcommand("state", "build a state and print it");
    sel.add_to(state, false);
    add_globals(state);

    auto *check = app.add_subcommand("check", "test Werner invariance of a state");
    sel.add_to(check, true);
    check->add_option("--samples", check_samples, "random SU(2) conjugations")->capture_default_str();
    add_globals(check);

    auto *dimension = app.add_subcommand("dimension", "Werner space dimension from null spaces");
    dimension->add_option("--n", n)->required();
    dimension->add_flag("--pure", pure, "pure-state (trivial summand) dimension");
    add_globals(dimension);

    auto *conjecture = app.add_subcommand("conjecture", "diagram-state basis experiment");
    conjecture->add_option("--n", n)->required();
    add_globals(conjecture);

    auto *stabilizer = app.add_subcommand("stabilizer", "stabilizer algebra vs lattice prediction");
    stabilizer->add_option("--terms", terms, "\"1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : 1.0\"")->required();
    stabilizer->add_flag("--pure", pure, "superpose chord states instead of mixing");
    add_globals(stabilizer);

    auto *twirl = app.add_subcommand("twirl", "project a state onto the Werner space");
    sel.add_to(twirl, true);
    twirl->add_option("--samples", twirl_samples, "also compare with a Monte Carlo twirl");
    add_globals(twirl);

    auto *suite = app.add_subcommand("suite", "run every self-check");
    suite->add_option("--samples", suite_samples, "Monte Carlo twirl samples (default 100000)");
    add_globals(suite);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*enumerate) {
            return cmd_enumerate(matchings, partitions, n, g, out);
        }
        if (*state) {
            return cmd_state(sel, g, out);
        }
        if (*check) {
            return cmd_check(sel, check_samples, g, out);
        }
        if (*dimension) {
            return cmd_dimension(n, pure, g, out);
        }
        if (*conjecture) {
            return cmd_conjecture(n, g, out);
        }
        if (*stabilizer) {
            return cmd_stabilizer(terms, pure, g, out);
        }
        if (*twirl) {
            return cmd_twirl(sel, twirl_samples, g, out);
        }
        return cmd_suite(suite_samples, g, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const NumericalError &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::logic_error &e) {
        // invalid_argument, out_of_range, domain_error
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "internal failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

}  // namespace werner::cli
