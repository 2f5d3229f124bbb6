#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polidiff/gate.hpp"

namespace polidiff {

struct FixtureDoc {
    std::string name;
    std::string text;
    bool is_policy = false;
};

// Deterministic two-class corpus for gate training and tests: `count` docs,
// half privacy-policy-like, half article-like, assembled from sentence
// templates under the given seed. Same (count, seed) -> same bytes.
std::vector<FixtureDoc> generate_gate_fixture(int count, std::uint64_t seed);

// Writes <dir>/policy/*.txt and <dir>/other/*.txt.
void write_gate_fixture(const std::string& dir, int count, std::uint64_t seed);

std::vector<LabeledDoc> fixture_to_corpus(const std::vector<FixtureDoc>& docs);

}  // namespace polidiff
