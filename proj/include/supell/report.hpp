#pragma once

// JSON payload builders for the command-line front end and the python
// module. Every builder is deterministic: identical inputs give
// byte-identical serialized output.

#include <json.hpp>

#include <string>

#include "supell/curve.hpp"
#include "supell/genvec.hpp"
#include "supell/signature.hpp"

namespace supell {

using Json = nlohmann::ordered_json;

Json signature_to_json(const Signature& s);  // [genus, [periods...]]

// {modulus, signature, move_set, class_count, classes:[{representative,size}]}
Json classify_report(long long modulus, const Signature& sig, MoveSet moves);

// Scalar or move-set equivalence of two concrete vectors, with the witness
// and the necessity cross-check.
Json equiv_report(const CyclicGenVec& v1, const CyclicGenVec& v2,
                  MoveSet moves);

// Everything known about one family member: case data, genus, branch set,
// chart exponents, and, when c is defined, the automorphism group model
// with its presentation, distinguished subgroups, rotation data, and
// sphere action.
Json family_report(long long n, long long a, const LambdaSpec& lambda);

// {m, eta, xi} plus the generator-change consistency sweep.
Json harvey_report(long long m, long long eta);

// Obstruction search plus the exceptional automorphism and the
// commuting-square checks.
Json conformal_report(long long n, long long a);

// The common envelope: {command, inputs, results, caveats}.
Json wrap_report(const std::string& command, Json inputs, Json results,
                 Json caveats);

// Plain-text rendering of a report for terminal output.
std::string render_text(const Json& j);

}  // namespace supell
