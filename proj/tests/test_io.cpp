#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "aztec/errors.hpp"
#include "aztec/io.hpp"

using namespace aztec;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("aztec_io_" + name)).string();
}

}  // namespace

TEST_CASE("slice JSON round trip is exact") {
    const auto f = wave::cone_solve(wave::temb_bc(), 40);
    const auto j = io::slice_to_json(f.slice(40), f.source());
    CHECK(j["schema"] == io::kSchema);
    const auto back = io::slice_from_json(io::json::parse(j.dump()));
    CHECK(back == f.slice(40));
}

TEST_CASE("slice JSON carries the exact text form") {
    const auto f = wave::cone_solve(wave::temb_bc(), 3);
    const auto j = io::slice_to_json(f.slice(3), f.source());
    bool found = false;
    for (const auto& e : j["values"]) {
        if (e["j"] == 1 && e["k"] == 1) found = e["v"] == "(1)+(1)i / 2^2";
    }
    CHECK(found);
}

TEST_CASE("field JSON round trip, full and rolling") {
    wave::SolverOptions full;
    full.history = wave::History::Full;
    const auto f = wave::cone_solve(wave::origami_bc(), 12, full);
    const auto back = io::field_from_json(io::field_to_json(f));
    CHECK(back.n_max() == 12);
    CHECK(back.source() == f.source());
    for (int n = 0; n <= 12; ++n) CHECK(back.slice(n) == f.slice(n));

    const auto rolling = wave::cone_solve(wave::temb_bc(), 9);
    const auto rb = io::field_from_json(io::field_to_json(rolling));
    CHECK(rb.history() == wave::History::Rolling);
    CHECK(rb.slice(9) == rolling.slice(9));
    CHECK(rb.slice(8) == rolling.slice(8));
}

TEST_CASE("embedding JSON round trip") {
    for (auto kind : {embedding::EmbeddingKind::T, embedding::EmbeddingKind::O}) {
        const auto e = embedding::build_embedding(kind, 17);
        const auto back = io::embedding_from_json(io::json::parse(io::embedding_to_json(e).dump()));
        CHECK(back.kind == kind);
        CHECK(back.pos == e.pos);
    }
    const auto t1 = io::embedding_to_json(embedding::build_t_embedding(1));
    CHECK(t1["values"].size() == 1);
    CHECK(t1["outer"].size() == 4);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(io::slice_from_json(io::json::parse(R"({"schema":"other","kind":"slice"})")), ArgumentError);
    CHECK_THROWS_AS(io::slice_from_json(io::json::parse(R"({"schema":"aztec-lab/1","kind":"field"})")), ArgumentError);
    // (1,0) is off the lattice at time 3.
    CHECK_THROWS_AS(io::slice_from_json(io::json::parse(
                        R"({"schema":"aztec-lab/1","kind":"slice","n":3,"values":[{"j":1,"k":0,"v":"(1)+(0)i / 2^0"}]})")),
                    ArgumentError);
    auto j = io::embedding_to_json(embedding::build_t_embedding(3));
    j["values"].erase(0);
    CHECK_THROWS_AS(io::embedding_from_json(j), ArgumentError);
}

TEST_CASE("CSV output") {
    const std::string csv = io::embedding_to_csv(embedding::build_t_embedding(2));
    CHECK(csv.rfind("vertex,j,k,re,im\n", 0) == 0);
    CHECK(csv.find("inner,1,0,0.5,0\n") != std::string::npos);
    CHECK(csv.find("E,,,1,0\n") != std::string::npos);
    const auto f = wave::cone_solve_float(wave::temb_bc(), 3);
    CHECK(io::slice_to_csv(f.slice(3)).find("3,1,1,0.25,0.25\n") != std::string::npos);
    CHECK(io::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("file IO") {
    const std::string path = temp_path("roundtrip.json");
    io::write_text(path, "hello\n");
    CHECK(io::read_text(path) == "hello\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::write_text("/nonexistent-dir/x.json", "x"), IoError);
    CHECK_THROWS_AS(io::read_text("/nonexistent-dir/x.json"), IoError);
}
