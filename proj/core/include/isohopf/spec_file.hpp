#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isohopf/iso_section.hpp"
#include "isohopf/routes.hpp"

namespace isohopf {

struct SpinBlock {
  std::array<long, 2> m_plus{};
  std::array<long, 2> m_minus{};
  std::array<std::string, 2> F, v;
};

// Parsed contents of a JSON section file. See README for the schema.
struct SectionSpec {
  std::string name;
  std::vector<std::string> variables;
  std::string form_label;  // preset name, or "gram"
  QuadSpace space;
  std::vector<std::string> components;
  std::optional<TorusWeights> torus;
  std::optional<SpinBlock> spin;
  std::vector<std::string> routes;  // empty: every route
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  std::size_t step_budget = 0;  // 0: default

  RingPtr ring() const;
  GroebnerOptions groebner() const;
  // Raw section, not yet validated.
  IsoSection section() const;
  std::optional<SpinData> spin_data() const;
};

SectionSpec parse_spec_json(const std::string& text, const std::string& name = "<memory>");
SectionSpec parse_spec(const std::string& path);

// "hyperbolic(n)", "sum_of_squares(2n)", "eg2"
QuadSpace quad_space_preset(const std::string& label);

nlohmann::ordered_json spec_to_json(const SectionSpec& spec);

}  // namespace isohopf
