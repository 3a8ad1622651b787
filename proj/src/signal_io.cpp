#include "perdecomp/signal_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "perdecomp/errors.hpp"
#include "report_json.hpp"

namespace perdecomp {

namespace {

constexpr double kAbscissaTol = 1e-12;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_double(std::string_view s, std::size_t line) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line) + ": not a finite number: '" +
                         std::string(s) + "'");
    }
    return v;
}

}  // namespace

SignalFormat format_for_path(std::string_view path) {
    return path.ends_with(".json") ? SignalFormat::json : SignalFormat::csv;
}

Rational approximate_rational(double x, std::int64_t max_den) {
    // Convergents h/k of the continued fraction of |x|.
    const bool negative = x < 0;
    double rest = std::abs(x);
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_real = std::floor(rest);
        if (a_real > 9.0e15) break;
        const auto a = static_cast<std::int64_t>(a_real);
        const std::int64_t h2 = a * h1 + h0;
        const std::int64_t k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
        const double frac = rest - a_real;
        if (frac < 1e-15) break;
        rest = 1.0 / frac;
    }
    if (k1 == 0) return Rational(0);
    return Rational(negative ? -h1 : h1, k1);
}

std::string to_csv(const Signal& f) {
    std::string out = "x,y\n";
    for (std::size_t j = 0; j < f.size(); ++j) {
        out += detail::format_double(f.grid().sample_point(j).to_double());
        out += ',';
        out += detail::format_double(f[j]);
        out += '\n';
    }
    return out;
}

std::string to_json_text(const Signal& f) {
    detail::JsonValue root = detail::JsonValue::object();
    root["period"] = f.grid().period().str();
    root["samples"] = std::vector<double>(f.values().begin(), f.values().end());
    return detail::dump_json(root) + "\n";
}

Signal parse_csv(std::string_view text, std::optional<Rational> period) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "x,y") throw ParseError("CSV signal must start with the header 'x,y'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two columns");
        }
        xs.push_back(parse_double(line.substr(0, comma), line_no));
        ys.push_back(parse_double(line.substr(comma + 1), line_no));
    }
    if (!header_seen) throw ParseError("empty CSV signal");
    if (ys.empty()) throw ParseError("CSV signal has no samples");

    const auto n = static_cast<std::int64_t>(ys.size());
    if (!period) {
        if (n < 2) throw ParseError("cannot infer the period from a single row; pass it explicitly");
        Rational step = approximate_rational(xs[1] - xs[0], 1'000'000);
        if (!step.is_positive()) throw ParseError("x column must be strictly increasing");
        period = step * Rational(n);
    }
    Grid grid(*period, ys.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double expected = grid.sample_point(j).to_double();
        if (std::abs(xs[j] - expected) > kAbscissaTol * std::max(1.0, std::abs(expected))) {
            throw ParseError("row " + std::to_string(j) + ": x = " + detail::format_double(xs[j]) +
                             " is off the grid of period " + grid.period().str() +
                             " (expected " + detail::format_double(expected) + ")");
        }
    }
    return Signal(grid, std::move(ys));
}

Signal parse_signal_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("period") || !doc.contains("samples")) {
        throw ParseError("JSON signal needs 'period' and 'samples'");
    }
    Rational period;
    const auto& p = doc["period"];
    if (p.is_string()) {
        period = Rational::parse(p.get<std::string>());
    } else if (p.is_number_integer()) {
        period = Rational(p.get<std::int64_t>());
    } else {
        throw ParseError("'period' must be a rational string such as \"3\" or \"1/2\"");
    }
    if (!period.is_positive()) throw ParseError("'period' must be positive");
    const auto& s = doc["samples"];
    if (!s.is_array() || s.empty()) throw ParseError("'samples' must be a non-empty array");
    std::vector<double> values;
    values.reserve(s.size());
    for (const auto& v : s) {
        if (!v.is_number()) throw ParseError("'samples' must hold numbers only");
        values.push_back(v.get<double>());
    }
    Grid grid(period, values.size());
    return Signal(grid, std::move(values));
}

std::string serialize(const Signal& f, SignalFormat format) {
    return format == SignalFormat::json ? to_json_text(f) : to_csv(f);
}

Signal read_signal_file(const std::string& path, std::optional<Rational> period) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (format_for_path(path) == SignalFormat::json) {
        Signal f = parse_signal_json(text);
        if (period && !(f.grid().period() == *period)) {
            throw ParseError("period in " + path + " disagrees with the explicit period");
        }
        return f;
    }
    return parse_csv(text, period);
}

void write_signal_file(const std::string& path, const Signal& f, SignalFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << serialize(f, format);
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace perdecomp
