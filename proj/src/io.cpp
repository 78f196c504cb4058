#include "aztec/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aztec/errors.hpp"

namespace aztec::io {

namespace {

void require_schema(const json& j, const char* kind) {
    if (!j.is_object() || j.value("schema", "") != kSchema) {
        throw ArgumentError(std::string("expected a ") + kSchema + " document");
    }
    if (j.value("kind", "") != kind) {
        throw ArgumentError(std::string("expected kind '") + kind + "', got '" + j.value("kind", "") + "'");
    }
}

json values_of(const wave::Slice<DyadicGaussian>& s) {
    json values = json::array();
    s.for_each([&](int j, int k, const DyadicGaussian& v) { values.push_back({{"j", j}, {"k", k}, {"v", v.to_string()}}); });
    return values;
}

wave::Slice<DyadicGaussian> slice_body_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    if (n < 0) throw ArgumentError("slice time must be >= 0");
    wave::Slice<DyadicGaussian> s(n);
    for (const auto& e : j.at("values")) {
        DyadicGaussian* cell = s.find(e.at("j").get<int>(), e.at("k").get<int>());
        if (!cell) throw ArgumentError("value outside the support of slice " + std::to_string(n));
        *cell = DyadicGaussian::parse(e.at("v").get<std::string>());
    }
    return s;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out + '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json slice_to_json(const wave::Slice<DyadicGaussian>& s, const std::string& source) {
    return {{"schema", kSchema}, {"kind", "slice"}, {"source", source}, {"n", s.time()}, {"values", values_of(s)}};
}

wave::Slice<DyadicGaussian> slice_from_json(const json& j) {
    require_schema(j, "slice");
    return slice_body_from_json(j);
}

json field_to_json(const wave::ExactField& f) {
    json slices = json::array();
    for (const auto& s : f.slices()) slices.push_back({{"n", s.time()}, {"values", values_of(s)}});
    return {{"schema", kSchema},
            {"kind", "field"},
            {"source", f.source()},
            {"n", f.n_max()},
            {"history", f.history() == wave::History::Full ? "full" : "rolling"},
            {"slices", slices}};
}

wave::ExactField field_from_json(const json& j) {
    require_schema(j, "field");
    const std::string history = j.at("history").get<std::string>();
    if (history != "full" && history != "rolling") throw ArgumentError("unknown history mode '" + history + "'");
    wave::ExactField f(j.at("source").get<std::string>(), history == "full" ? wave::History::Full : wave::History::Rolling);
    for (const auto& s : j.at("slices")) f.push(slice_body_from_json(s));
    if (f.n_max() != j.at("n").get<int>()) throw ArgumentError("field n does not match its last slice");
    return f;
}

json embedding_to_json(const embedding::TEmbedding& t) {
    using embedding::Side;
    json values = json::array();
    t.pos.for_each_inner([&](int j, int k, const DyadicGaussian& v) { values.push_back({{"j", j}, {"k", k}, {"v", v.to_string()}}); });
    json outer = json::object();
    for (int s = 0; s < 4; ++s) outer[embedding::to_string(Side(s))] = t.pos.outer(Side(s)).to_string();
    return {{"schema", kSchema}, {"kind", embedding::to_string(t.kind)}, {"n", t.n()}, {"values", values}, {"outer", outer}};
}

embedding::TEmbedding embedding_from_json(const json& j) {
    using embedding::Side;
    if (!j.is_object() || j.value("schema", "") != kSchema) throw ArgumentError(std::string("expected a ") + kSchema + " document");
    const std::string kind = j.value("kind", "");
    if (kind != "T" && kind != "O") throw ArgumentError("expected kind 'T' or 'O', got '" + kind + "'");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ArgumentError("embedding n must be >= 1");
    embedding::TEmbedding t{kind == "T" ? embedding::EmbeddingKind::T : embedding::EmbeddingKind::O,
                            embedding::DualField<DyadicGaussian>(n)};
    std::size_t count = 0;
    for (const auto& e : j.at("values")) {
        t.pos.inner(e.at("j").get<int>(), e.at("k").get<int>()) = DyadicGaussian::parse(e.at("v").get<std::string>());
        ++count;
    }
    if (count != static_cast<std::size_t>(2 * n * n - 2 * n + 1)) throw ArgumentError("embedding has the wrong number of inner values");
    for (int s = 0; s < 4; ++s) {
        t.pos.outer(Side(s)) = DyadicGaussian::parse(j.at("outer").at(embedding::to_string(Side(s))).get<std::string>());
    }
    return t;
}

json origami_prime_to_json(const embedding::OrigamiPrime& p) {
    using embedding::Side;
    json values = json::array();
    p.q.for_each_inner([&](int j, int k, const DyadicGaussian& v) { values.push_back({{"j", j}, {"k", k}, {"q", v.to_string()}}); });
    json outer = json::object();
    for (int s = 0; s < 4; ++s) outer[embedding::to_string(Side(s))] = p.q.outer(Side(s)).to_string();
    return {{"schema", kSchema}, {"kind", "O'"}, {"n", p.n()}, {"scale", "1/sqrt(2)"}, {"values", values}, {"outer", outer}};
}

json verify_to_json(const embedding::VerifyReport& r) {
    return {{"schema", kSchema},
            {"kind", "verify"},
            {"n", r.n},
            {"ok", r.ok()},
            {"edges_checked", r.edges_checked},
            {"degenerate_edges", r.degenerate_edges},
            {"faces_checked", r.faces_checked},
            {"nonconvex_faces", r.nonconvex_faces},
            {"misoriented_faces", r.misoriented_faces},
            {"angle_vertices", r.angle_vertices},
            {"max_angle_deviation", r.max_angle_deviation},
            {"xf_checked", r.xf_checked},
            {"xf_failures", r.xf_failures},
            {"findings", r.findings}};
}

json miquel_to_json(const embedding::MiquelReport& r) {
    return {{"n", r.n},
            {"ok", r.ok()},
            {"renewed", r.renewed},
            {"product_failures", r.product_failures},
            {"carried", r.carried},
            {"carry_failures", r.carry_failures},
            {"findings", r.findings}};
}

json fatness_to_json(const embedding::FatnessStats& s) {
    return {{"n", s.n},
            {"faces", s.faces.size()},
            {"min_ratio", s.min_ratio},
            {"min_ratio_annulus", s.min_ratio_annulus},
            {"annulus_faces", s.annulus_faces},
            {"min_inradius", s.min_inradius}};
}

json convergence_to_json(const convergence::ConvergenceReport& r) {
    json tables = json::array();
    for (const auto& t : r.tables) {
        json rows = json::array();
        for (const auto& row : t.rows) rows.push_back({{"n", row.n}, {"value", row.value}, {"samples", row.samples}});
        tables.push_back({{"name", t.name}, {"rows", rows}, {"decreasing", t.decreasing()}});
    }
    return {{"schema", kSchema},
            {"kind", "convergence"},
            {"check", r.check},
            {"n_list", r.n_list},
            {"compact", r.region.compact},
            {"band", r.region.band},
            {"tables", tables},
            {"consistency_failures", r.consistency_failures},
            {"ok", r.ok()}};
}

std::string slice_to_csv(const wave::Slice<DyadicGaussian>& s) {
    std::string out = "n,j,k,re,im\n";
    s.for_each([&](int j, int k, const DyadicGaussian& v) {
        const auto c = v.to_complex();
        out += csv_row({std::to_string(s.time()), std::to_string(j), std::to_string(k), format_double(c.real()),
                        format_double(c.imag())});
    });
    return out;
}

std::string slice_to_csv(const wave::Slice<std::complex<double>>& s) {
    std::string out = "n,j,k,re,im\n";
    s.for_each([&](int j, int k, const std::complex<double>& c) {
        out += csv_row({std::to_string(s.time()), std::to_string(j), std::to_string(k), format_double(c.real()),
                        format_double(c.imag())});
    });
    return out;
}

std::string embedding_to_csv(const embedding::TEmbedding& t) {
    using embedding::Side;
    std::string out = "vertex,j,k,re,im\n";
    t.pos.for_each_inner([&](int j, int k, const DyadicGaussian& v) {
        const auto c = v.to_complex();
        out += csv_row({"inner", std::to_string(j), std::to_string(k), format_double(c.real()), format_double(c.imag())});
    });
    for (int s = 0; s < 4; ++s) {
        const auto c = t.pos.outer(Side(s)).to_complex();
        out += csv_row({embedding::to_string(Side(s)), "", "", format_double(c.real()), format_double(c.imag())});
    }
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("failed to write to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed to write '" + path + "'");
}

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace aztec::io
