#include "perdecomp/cli.hpp"

#include <cctype>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "perdecomp/circulant.hpp"
#include "perdecomp/cyclotomic.hpp"
#include "perdecomp/errors.hpp"
#include "perdecomp/halving.hpp"
#include "perdecomp/lattice.hpp"
#include "perdecomp/signal_io.hpp"
#include "perdecomp/subspaces.hpp"
#include "report_json.hpp"

namespace perdecomp {

namespace {

using detail::JsonValue;

struct GlobalOptions {
    double tol = kDefaultTol;
    std::string out;
    std::string format;
    std::string input_period;
    bool stamp = false;
};

struct LoadedInput {
    std::string path;
    std::string digest;
    Signal signal;
};

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

LoadedInput load_input(const std::string& path, const GlobalOptions& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::optional<Rational> period;
    if (!g.input_period.empty()) period = Rational::parse(g.input_period);
    if (format_for_path(path) == SignalFormat::json) {
        Signal f = parse_signal_json(text);
        if (period && !(f.grid().period() == *period)) {
            throw ParseError("period in " + path + " disagrees with --input-period");
        }
        return {path, fnv1a64(text), std::move(f)};
    }
    return {path, fnv1a64(text), parse_csv(text, period)};
}

SignalFormat signal_format(const GlobalOptions& g, std::optional<SignalFormat> fallback) {
    if (g.format == "csv") return SignalFormat::csv;
    if (g.format == "json") return SignalFormat::json;
    if (!g.format.empty()) throw InvalidParameter("signal files are csv or json, not " + g.format);
    return fallback.value_or(SignalFormat::csv);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Accumulates a machine-readable report; part signals are written under
/// --out when given and inlined otherwise.
class Report {
public:
    Report(const std::string& command, const std::vector<std::string>& args,
           const GlobalOptions& g)
        : g_(g) {
        root_["command"] = command;
        root_["argv"] = args;
        if (!g_.out.empty()) std::filesystem::create_directories(g_.out);
        format_ = signal_format(g_, std::nullopt);
    }

    void input(const LoadedInput& in) {
        JsonValue v = JsonValue::object();
        v["path"] = in.path;
        v["digest"] = in.digest;
        v["period"] = in.signal.grid().period().str();
        v["n_samples"] = in.signal.size();
        root_["input"] = std::move(v);
    }

    JsonValue& parameters() { return section("parameters", JsonValue::object()); }

    void output(const std::string& name, const std::string& subspace, const Signal& s) {
        JsonValue v = JsonValue::object();
        v["name"] = name;
        v["subspace"] = subspace;
        if (g_.out.empty()) {
            v["samples"] = std::vector<double>(s.values().begin(), s.values().end());
        } else {
            const std::string ext = format_ == SignalFormat::json ? ".json" : ".csv";
            const std::string path = (std::filesystem::path(g_.out) / (name + ext)).string();
            write_signal_file(path, s, format_);
            v["path"] = path;
        }
        section("outputs", JsonValue::array()).push_back(std::move(v));
    }

    void check(const std::string& name, const std::string& predicate, double defect, double tol,
               bool passed) {
        JsonValue v = JsonValue::object();
        v["name"] = name;
        v["predicate"] = predicate;
        v["defect"] = defect;
        v["tol"] = tol;
        v["passed"] = passed;
        section("checks", JsonValue::array()).push_back(std::move(v));
    }

    JsonValue& residuals() { return section("residuals", JsonValue::object()); }

    std::string finish() {
        if (g_.stamp) root_["timestamp"] = utc_timestamp();
        if (g_.out.empty()) return detail::dump_json(root_, 2) + "\n";
        const std::string text = detail::dump_json(root_, 2) + "\n";
        std::ofstream f(std::filesystem::path(g_.out) / "report.json", std::ios::binary);
        if (!f) throw IoError("cannot write report.json under " + g_.out);
        f << text;
        return text;
    }

private:
    JsonValue& section(const char* key, JsonValue init) {
        if (!root_.contains(key)) root_[key] = std::move(init);
        return root_[key];
    }

    const GlobalOptions& g_;
    JsonValue root_ = JsonValue::object();
    SignalFormat format_ = SignalFormat::csv;
};

// Membership spelled for reports: "periodic q=1/2" etc.
void check_periodic(Report& r, const std::string& name, const Signal& s, const Rational& q,
                    double tol) {
    const double d = periodicity_defect(s, q);
    const double bound = tol * (1.0 + sup_norm(s));
    r.check(name, "periodic q=" + q.str(), d, bound, d <= bound);
}

void check_antiperiodic(Report& r, const std::string& name, const Signal& s, const Rational& q,
                        double tol) {
    const double d = antiperiodicity_defect(s, q);
    const double bound = tol * (1.0 + sup_norm(s));
    r.check(name, "antiperiodic q=" + q.str(), d, bound, d <= bound);
}

void check_label(Report& r, const std::string& name, const Signal& s, const SubspaceLabel& label,
                 double tol) {
    switch (label.kind) {
        case SubspaceKind::periodic:
            check_periodic(r, name, s, Rational(label.param), tol);
            return;
        case SubspaceKind::antiperiodic:
            check_antiperiodic(r, name, s, Rational(label.param), tol);
            return;
        case SubspaceKind::cyclotomic: {
            const ShiftPoly op = CyclotomicPoly::of(label.param).to_shift_poly();
            const double d = sup_norm(apply_operator(op, s));
            const double bound = tol * (1.0 + sup_norm(s));
            r.check(name, "kernel " + op.str(), d, bound, d <= bound);
            return;
        }
    }
}

std::string half_label(const char* prefix, const Rational& q) { return std::string(prefix) + "(" + q.str() + ")"; }

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    std::string period = "1";
    std::size_t samples = 0;
    std::string freq = "1";
    double amplitude = 1.0;
    double value = 0.0;
    double offset = 0.0;
};

int cmd_gen(const GenArgs& a, const GlobalOptions& g, std::ostream& out) {
    Grid grid(Rational::parse(a.period), a.samples);
    Generator gen;
    if (a.kind == "sawtooth") {
        gen = Sawtooth{};
    } else if (a.kind == "cos") {
        gen = Cosine{Rational::parse(a.freq), a.amplitude};
    } else if (a.kind == "sin") {
        gen = Sine{Rational::parse(a.freq), a.amplitude};
    } else if (a.kind == "constant") {
        gen = Constant{a.value};
    } else {
        throw InvalidParameter("unknown generator '" + a.kind + "'");
    }
    Signal f = make_signal(grid, gen);
    if (a.offset != 0.0) f = combine(1.0, f, a.offset, make_signal(grid, Constant{1.0}));
    if (g.out.empty()) {
        out << serialize(f, signal_format(g, std::nullopt));
    } else {
        write_signal_file(g.out, f, signal_format(g, format_for_path(g.out)));
    }
    return kExitOk;
}

int cmd_decompose(const std::string& input, int levels, const std::vector<std::string>& args,
                  const GlobalOptions& g, std::ostream& out) {
    LoadedInput in = load_input(input, g);
    const Signal& f = in.signal;
    GenerationTable table = generation_table(f, levels);
    Report r("decompose", args, g);
    r.input(in);
    r.parameters()["levels"] = levels;
    const Rational& p = f.grid().period();
    const Rational finest = p / Rational(std::int64_t{1} << levels);
    r.output("periodic_" + std::to_string(levels), half_label("P", finest), table.periodic(levels));
    for (int k = 1; k <= levels; ++k) {
        const Rational q = p / Rational(std::int64_t{1} << k);
        r.output("antiperiodic_" + std::to_string(k), half_label("AP", q), table.antiperiodic(k));
    }
    check_periodic(r, "periodic_" + std::to_string(levels), table.periodic(levels), finest, g.tol);
    for (int k = 1; k <= levels; ++k) {
        const Rational q = p / Rational(std::int64_t{1} << k);
        check_antiperiodic(r, "antiperiodic_" + std::to_string(k), table.antiperiodic(k), q, g.tol);
    }
    r.residuals()["reconstruction"] = max_abs_diff(f, table.reconstruct());
    r.residuals()["product_form_deviation"] = table.product_deviation();
    out << r.finish();
    return kExitOk;
}

int cmd_series(const std::string& input, std::optional<int> max_levels,
               const std::vector<std::string>& args, const GlobalOptions& g, std::ostream& out) {
    LoadedInput in = load_input(input, g);
    const Signal& f = in.signal;
    int levels = 0;
    if (max_levels) {
        levels = *max_levels;
    } else {
        while (levels < 30 && f.size() % (std::size_t{1} << (levels + 1)) == 0) ++levels;
    }
    SeriesReport s = antiperiodic_series(f, g.tol, levels);
    Report r("series", args, g);
    r.input(in);
    r.parameters()["tol"] = g.tol;
    r.parameters()["max_levels"] = levels;
    for (std::size_t k = 0; k < s.partial_terms.size(); ++k) {
        const Rational q = f.grid().period() / Rational(std::int64_t{1} << (k + 1));
        r.output("antiperiodic_" + std::to_string(k + 1), half_label("AP", q), s.partial_terms[k]);
    }
    r.residuals()["residual_norms"] = s.residual_norms;
    r.residuals()["converged"] = s.converged;
    r.residuals()["levels_used"] = s.levels_used;
    r.residuals()["partial_sum_error"] =
        max_abs_diff(f, s.partial_sum(s.levels_used, f.grid()));
    out << r.finish();
    return kExitOk;
}

// "P3", "P:3", "P 1/2", "AP1", "S", "T", "U", "C5"
struct CheckKind {
    std::string prefix;
    Rational param;
};

CheckKind parse_check_kind(const std::string& text) {
    std::size_t i = 0;
    std::string prefix;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
        prefix += static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        ++i;
    }
    std::string rest = text.substr(i);
    if (!rest.empty() && (rest.front() == ':' || rest.front() == ' ')) rest.erase(0, 1);
    if (prefix == "S" || prefix == "T" || prefix == "U") {
        if (!rest.empty()) throw ParseError("kind " + prefix + " takes no parameter");
        return {prefix, Rational(0)};
    }
    if (prefix != "P" && prefix != "AP" && prefix != "C") {
        throw ParseError("unknown check kind '" + text + "' (P d, AP d, S, T, U, C k)");
    }
    if (rest.empty()) throw ParseError("kind " + prefix + " needs a parameter");
    Rational q = Rational::parse(rest);
    if (!q.is_positive()) throw ParseError("check parameter must be positive");
    if (prefix == "C" && !q.is_integer()) throw ParseError("cyclotomic index must be an integer");
    return {prefix, q};
}

int cmd_check(const std::string& input, const std::string& kind_text,
              const std::vector<std::string>& args, const GlobalOptions& g, std::ostream& out) {
    LoadedInput in = load_input(input, g);
    const Signal& f = in.signal;
    const CheckKind kind = parse_check_kind(kind_text);
    Report r("check", args, g);
    r.input(in);
    r.parameters()["kind"] = kind_text;
    bool result = false;
    if (kind.prefix == "P" || kind.prefix == "AP") {
        const bool periodic = kind.prefix == "P";
        const double d = periodic ? periodicity_defect(f, kind.param)
                                  : antiperiodicity_defect(f, kind.param);
        result = d <= g.tol;
        r.check(kind_text, std::string(periodic ? "periodic" : "antiperiodic") + " q=" + kind.param.str(),
                d, g.tol, result);
    } else {
        std::int64_t index = kind.param.num();
        if (kind.prefix == "S") index = 3;
        if (kind.prefix == "T") index = 6;
        if (kind.prefix == "U") index = 12;
        const ShiftPoly op = CyclotomicPoly::of(index).to_shift_poly();
        const double d = sup_norm(apply_operator(op, f));
        result = in_kernel(op, f, g.tol);
        r.check(kind_text, "kernel " + op.str(), d, g.tol * (1.0 + sup_norm(f)), result);
    }
    r.residuals()["result"] = result;
    out << r.finish();
    return kExitOk;
}

std::int64_t grid_integer_period(const Signal& f) {
    if (!f.grid().period().is_integer()) {
        throw InvalidParameter("grid period " + f.grid().period().str() +
                               " is not an integer; pass --period");
    }
    return f.grid().period().num();
}

int cmd_fold(const std::string& input, std::int64_t d, std::optional<std::int64_t> p_opt, bool anti,
             const std::vector<std::string>& args, const GlobalOptions& g, std::ostream& out) {
    LoadedInput in = load_input(input, g);
    const Signal& f = in.signal;
    const std::int64_t p = p_opt ? *p_opt : grid_integer_period(f);
    Report r(anti ? "fold --anti" : "fold", args, g);
    r.input(in);
    r.parameters()["d"] = d;
    r.parameters()["p"] = p;
    if (anti) {
        Signal res = antifold(f, d, p);
        const std::string name = "antifold_" + std::to_string(d);
        r.output(name, "AP_" + std::to_string(d), res);
        check_antiperiodic(r, name, res, Rational(d), g.tol);
    } else {
        Signal res = fold(f, d, p);
        const std::string name = "fold_" + std::to_string(d);
        r.output(name, "P_" + std::to_string(d), res);
        check_periodic(r, name, res, Rational(d), g.tol);
    }
    out << r.finish();
    return kExitOk;
}

int cmd_project(const std::string& input, const std::string& mode, std::optional<std::int64_t> p_opt,
                const std::vector<std::string>& args, const GlobalOptions& g, std::ostream& out) {
    LoadedInput in = load_input(input, g);
    const Signal& f = in.signal;
    Report r("project", args, g);
    r.input(in);
    r.parameters()["mode"] = mode;
    std::vector<std::pair<SubspaceLabel, Signal>> parts;
    if (mode == "P3" || mode == "AP3" || mode == "AP6") {
        RationalProjection proj = mode == "P3"    ? project_P3(f, g.tol)
                                  : mode == "AP3" ? project_AP3(f, g.tol)
                                                  : project_AP6(f, g.tol);
        SubspaceLabel base = mode == "P3"    ? periodic_label(1)
                             : mode == "AP3" ? antiperiodic_label(1)
                                             : antiperiodic_label(2);
        const std::int64_t k = mode == "P3" ? 3 : mode == "AP3" ? 6 : 12;
        SubspaceLabel kernel{SubspaceKind::cyclotomic, k, mode == "P3" ? "S" : mode == "AP3" ? "T" : "U"};
        parts.emplace_back(base, std::move(proj.base));
        parts.emplace_back(kernel, std::move(proj.kernel));
    } else if (mode == "cyclotomic") {
        const std::int64_t p = p_opt ? *p_opt : grid_integer_period(f);
        r.parameters()["p"] = p;
        Decomposition dec = cyclotomic_decompose(f, p, g.tol);
        for (const auto& part : dec.parts()) parts.emplace_back(part.label, part.signal);
    } else {
        throw InvalidParameter("unknown projection mode '" + mode + "' (P3, AP3, AP6, cyclotomic)");
    }
    Signal total = Signal::zeros(f.grid());
    for (const auto& [label, s] : parts) {
        r.output(label.name, label.name, s);
        total = combine(1.0, total, 1.0, s);
    }
    for (const auto& [label, s] : parts) check_label(r, label.name, s, label, g.tol);
    r.residuals()["recombination"] = max_abs_diff(f, total);
    out << r.finish();
    return kExitOk;
}

int cmd_diagram(std::int64_t p, const GlobalOptions& g, std::ostream& out) {
    const std::string fmt = g.format.empty() ? "dot" : g.format;
    const Diagram d = build_diagram(p);
    if (fmt == "dot") {
        out << to_dot(d);
    } else if (fmt == "json") {
        out << to_json(d);
    } else {
        throw InvalidParameter("diagram format must be dot or json, not " + fmt);
    }
    return kExitOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::io_error:
        case ErrorCode::invalid_parameter:
        case ErrorCode::length_mismatch: return kExitUsage;
        case ErrorCode::singular_operator: return kExitNumeric;
        default: return kExitPrecondition;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Periodic/antiperiodic decomposition of sampled periodic signals", "perdecomp"};
    app.require_subcommand(1, 1);

    GlobalOptions g;
    app.add_option("--tol", g.tol, "Comparison tolerance")->capture_default_str();
    app.add_option("--out", g.out, "Output file (gen) or directory (other commands)");
    app.add_option("--format", g.format, "csv|json for signals, dot|json for diagrams");
    app.add_option("--input-period", g.input_period, "Period of a CSV input, e.g. 1/2");
    app.add_flag("--stamp", g.stamp, "Add a UTC timestamp to reports");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a sampled signal")->fallthrough();
    gen->add_option("kind", gen_args.kind, "sawtooth|cos|sin|constant")->required();
    gen->add_option("--period", gen_args.period, "Period as a rational, e.g. 3 or 1/2");
    gen->add_option("--samples", gen_args.samples, "Samples per period")->required();
    gen->add_option("--freq", gen_args.freq, "Frequency (cos/sin) as a rational");
    gen->add_option("--amplitude", gen_args.amplitude, "Amplitude (cos/sin)");
    gen->add_option("--value", gen_args.value, "Value (constant)");
    gen->add_option("--offset", gen_args.offset, "Constant added to every sample");

    std::string input;
    int levels = 0;
    auto* decompose = app.add_subcommand("decompose", "Periodic/antiperiodic generations")->fallthrough();
    decompose->add_option("input", input, "Signal file (.csv or .json)")->required();
    decompose->add_option("-n,--levels", levels, "Number of halvings")->required();

    std::optional<int> max_levels;
    auto* series = app.add_subcommand("series", "Antiperiodic series expansion")->fallthrough();
    series->add_option("input", input, "Signal file")->required();
    series->add_option("--max-levels", max_levels, "Deepest level (default: all 2-adic levels)");

    std::string kind;
    auto* check = app.add_subcommand("check", "Membership test")->fallthrough();
    check->add_option("input", input, "Signal file")->required();
    check->add_option("--kind", kind, "P d, AP d, S, T, U or C k")->required();

    std::int64_t fold_d = 1;
    std::optional<std::int64_t> p_opt;
    bool anti = false;
    auto* fold_cmd = app.add_subcommand("fold", "Fold onto a divisor period")->fallthrough();
    fold_cmd->add_option("input", input, "Signal file")->required();
    fold_cmd->add_option("-d", fold_d, "Target period d (divisor of p)")->required();
    fold_cmd->add_option("-p,--period", p_opt, "Ambient integer period p (default: grid period)");
    fold_cmd->add_flag("--anti", anti, "Alternating fold (p/d odd, antiperiodic context)");

    std::string mode;
    auto* project = app.add_subcommand("project", "Subspace projections")->fallthrough();
    project->add_option("input", input, "Signal file")->required();
    project->add_option("--mode", mode, "P3|AP3|AP6|cyclotomic")->required();
    project->add_option("-p,--period", p_opt, "Period for the cyclotomic decomposition");

    std::int64_t diagram_p = 1;
    auto* diagram = app.add_subcommand("diagram", "Periodicity diagram of P_p")->fallthrough();
    diagram->add_option("-p,--period", diagram_p, "Integer period p")->required();

    std::vector<const char*> argv{"perdecomp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_args, g, out);
        if (*decompose) return cmd_decompose(input, levels, args, g, out);
        if (*series) return cmd_series(input, max_levels, args, g, out);
        if (*check) return cmd_check(input, kind, args, g, out);
        if (*fold_cmd) return cmd_fold(input, fold_d, p_opt, anti, args, g, out);
        if (*project) return cmd_project(input, mode, p_opt, args, g, out);
        if (*diagram) return cmd_diagram(diagram_p, g, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::logic_error& e) {
        err << "error: numeric consistency: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace perdecomp
