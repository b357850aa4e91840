#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqp/errors.hpp"
#include "eqp/pencil.hpp"

namespace eqp {

// Whether the displayed rows index the target (the pencil's own row
// convention) or the source.
enum class Orientation { rows_target, rows_source };

std::string to_string(Orientation o);

struct Fixture {
    std::string name;
    Orientation orientation = Orientation::rows_target;
    std::size_t display_rows = 0;
    std::size_t display_cols = 0;
    Pencil pencil;  // target x source
};

// Text format:
//   # comment
//   vars: x, y, z
//   alias: t = -2*x          (optional, linear in the variables)
//   rows: target | source    (optional, default target)
//   -y, -z, 0, x + 2*y       (one display row per line)
Fixture parse_fixture(std::string_view text, const std::string& source = "<input>");

// Fixtures compiled into the library.
std::vector<std::string> fixture_names();
std::string_view fixture_text(const std::string& name);
Fixture load_fixture(const std::string& name);

Pencil transposed(const Pencil& p);

}  // namespace eqp
