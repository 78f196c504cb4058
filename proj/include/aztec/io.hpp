#pragma once

#include <string>

#include <json.hpp>

#include "aztec/convergence.hpp"
#include "aztec/embedding.hpp"
#include "aztec/wave.hpp"

// Serialization. Exact values are written as strings "(a)+(b)i / 2^s" in
// JSON; float output is CSV with 17 significant digits.
namespace aztec::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "aztec-lab/1";

json slice_to_json(const wave::Slice<DyadicGaussian>& s, const std::string& source);
wave::Slice<DyadicGaussian> slice_from_json(const json& j);

/// Every retained slice of the field.
json field_to_json(const wave::ExactField& f);
wave::ExactField field_from_json(const json& j);

json embedding_to_json(const embedding::TEmbedding& t);
embedding::TEmbedding embedding_from_json(const json& j);

/// The q values of O' = q / sqrt(2).
json origami_prime_to_json(const embedding::OrigamiPrime& p);

json verify_to_json(const embedding::VerifyReport& r);
json miquel_to_json(const embedding::MiquelReport& r);
json fatness_to_json(const embedding::FatnessStats& s);
json convergence_to_json(const convergence::ConvergenceReport& r);

/// "n,j,k,re,im" rows.
std::string slice_to_csv(const wave::Slice<DyadicGaussian>& s);
std::string slice_to_csv(const wave::Slice<std::complex<double>>& s);
/// "vertex,j,k,re,im" rows; vertex is "inner" or E/N/W/S.
std::string embedding_to_csv(const embedding::TEmbedding& t);

/// %.17g.
std::string format_double(double v);

/// Throws IoError if the file cannot be written or read. Path "-" means
/// stdout for writing.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace aztec::io
