#pragma once

#include <string>

#include "rotorkit/panel.hpp"

namespace rotorkit {

// Built-in 95-row, four-index GMV panel (2023-01-03 .. 2023-04-07), also
// shipped as data/table2.csv. Addressed as `fixture:table2` by the CLI.
const std::string& table2_csv();

PanelSchema table2_schema();

Panel load_table2();

}  // namespace rotorkit
