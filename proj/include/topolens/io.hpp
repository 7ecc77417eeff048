#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "topolens/frames.hpp"
#include "topolens/lattice.hpp"
#include "topolens/powerdomain.hpp"
#include "topolens/properties.hpp"
#include "topolens/space.hpp"
#include "topolens/symbolic.hpp"

namespace topolens {

inline constexpr int kSchemaVersion = 1;

/// {"n": int, "opens": [[...]]} or {"n": int, "subbasis": [[...]]}, with
/// exactly one of the two keys. Throws InputError.
FinSpace space_from_json(const nlohmann::json& j);
/// Opens as sorted point lists.
nlohmann::json space_to_json(const FinSpace& space);

/// {"n": int, "leq": [[x, y], ...]}; reflexive pairs may be omitted. With
/// `strict`, input that is not already transitive is rejected.
Preorder preorder_from_json(const nlohmann::json& j, bool strict = false);
nlohmann::json preorder_to_json(const Preorder& p);

/// {"m": int, "leq": [[a, b], ...]}; meet and join are derived.
FinLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const FinLattice& l);

nlohmann::json point_list(PointSet s);
nlohmann::json element_list(const ElementSet& s);

nlohmann::json to_json(const SpaceProperties& p);
nlohmann::json to_json(const FrameReport& r);
nlohmann::json to_json(const Filter& f);
nlohmann::json to_json(const TemperanceReport& r);
nlohmann::json to_json(const WayBelowReport& r);
/// The unit and counit fields of a DualityReport.
nlohmann::json stone_json(const DualityReport& r);
/// The Hofmann-Mislove fields of a DualityReport.
nlohmann::json hofmann_mislove_json(const DualityReport& r);
nlohmann::json to_json(const HyperspaceReport& r);
nlohmann::json to_json(const std::vector<Lens>& ls);
nlohmann::json to_json(const std::vector<QuasiLens>& qs);
nlohmann::json to_json(const CounterexampleReport& r);

/// Parses text, turning parser errors into InputError.
nlohmann::json parse_json(const std::string& text);

}  // namespace topolens
