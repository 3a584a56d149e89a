#include "cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cli {

using padeguard::Complex;

namespace {

Complex from_json(const Json& v) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw IoError("expected a number or an [re, im] pair, got " + v.dump());
}

std::vector<Complex> parse_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw IoError("expected a JSON array of coefficients");
    }
    std::vector<Complex> out;
    out.reserve(doc.size());
    for (const auto& v : doc) {
        out.push_back(from_json(v));
    }
    return out;
}

std::vector<Complex> parse_lines(const std::string& text) {
    std::vector<Complex> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double re = 0.0, im = 0.0;
        if (!(fields >> re)) {
            throw IoError("line " + std::to_string(lineno) + ": expected `re im`");
        }
        if (!(fields >> im)) {
            im = 0.0;
            fields.clear();
        }
        std::string rest;
        if (fields >> rest) {
            throw IoError("line " + std::to_string(lineno) + ": trailing text `" + rest + "`");
        }
        out.emplace_back(re, im);
    }
    return out;
}

}  // namespace

std::vector<Complex> parse_coefficients(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    auto out = first != std::string::npos && text[first] == '[' ? parse_json(text) : parse_lines(text);
    if (out.empty()) {
        throw IoError("no coefficients found");
    }
    for (const auto& z : out) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw IoError("coefficients must be finite");
        }
    }
    return out;
}

std::vector<Complex> read_coefficients(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficients(buf.str());
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw IoError("cannot write " + path);
    }
}

Json number(double v) { return std::isfinite(v) ? Json(v == 0.0 ? 0.0 : v) : Json(nullptr); }

Json complex(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json coefficients(const padeguard::Polynomial& p) {
    Json out = Json::array();
    for (const auto& z : p.coeffs()) {
        out.push_back(complex(z));
    }
    return out;
}

std::string text(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string text(Complex z) {
    if (z.imag() == 0.0) return text(z.real());
    return text(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + text(std::abs(z.imag())) + "i";
}

}  // namespace cli
