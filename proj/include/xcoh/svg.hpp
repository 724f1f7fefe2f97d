#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "xcoh/ensemble.hpp"

namespace xcoh {

/// Axes name record-schema columns; each overlay family is drawn as a
/// polyline over a 201-point epsilon grid.
struct FigureSpec {
  std::string x_column;
  std::string y_column;
  std::vector<FamilyKind> overlays;
};

std::string_view family_name(FamilyKind kind);

/// Renders a standalone SVG scatter plot: one <circle> per record, one
/// <polyline> per overlay family, labeled axes and a legend. Throws
/// std::invalid_argument for unknown column names.
void emit_svg_scatter(const FigureSpec& spec,
                      std::span<const EnsembleRecord> records,
                      const std::filesystem::path& path);

/// Same, but returns the document instead of writing it.
std::string render_svg_scatter(const FigureSpec& spec,
                               std::span<const EnsembleRecord> records);

}  // namespace xcoh
