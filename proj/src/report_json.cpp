#include "report_json.hpp"

#include <cmath>
#include <cstdio>

namespace perdecomp::detail {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

bool is_scalar(const JsonValue& v) { return !v.is_object() && !v.is_array(); }

void emit(const JsonValue& v, int indent, int depth, std::string& out) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (!pretty) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };

    if (v.is_object()) {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, item] : v.items()) {
            if (!first) out += ',';
            first = false;
            newline(depth + 1);
            out += JsonValue(key).dump();
            out += pretty ? ": " : ":";
            emit(item, indent, depth + 1, out);
        }
        newline(depth);
        out += '}';
    } else if (v.is_array()) {
        bool flat = true;
        for (const auto& item : v) flat = flat && is_scalar(item);
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) out += pretty && flat ? ", " : ",";
            first = false;
            if (!flat) newline(depth + 1);
            emit(item, indent, depth + 1, out);
        }
        if (!flat && !v.empty()) newline(depth);
        out += ']';
    } else if (v.is_number_float()) {
        out += format_double(v.get<double>());
    } else {
        out += v.dump();
    }
}

}  // namespace

std::string dump_json(const JsonValue& value, int indent) {
    std::string out;
    emit(value, indent, 0, out);
    return out;
}

}  // namespace perdecomp::detail
