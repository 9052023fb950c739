#pragma once

#include "blockdim/blockcalc.hpp"
#include "blockdim/rootsys.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace blockdim {

/// JSON form of a report. Keys are emitted in sorted order and every rational
/// coordinate as a "p/q" string, so parse(dump(j)).dump() == dump(j).
/// `variant` selects which minimality verdict fills the "minimal" field; both
/// verdicts are always present as well.
nlohmann::json report_to_json(const RootSystem& rs, const BlockReport& r,
                              OrderVariant variant = OrderVariant::RootLattice);

void write_csv_header(std::ostream& os);
void write_csv(std::ostream& os, const RootSystem& rs, const BlockReport& r,
               OrderVariant variant = OrderVariant::RootLattice);
void write_table(std::ostream& os, const RootSystem& rs, const BlockReport& r,
                 OrderVariant variant = OrderVariant::RootLattice);

} // namespace blockdim
