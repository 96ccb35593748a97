#pragma once

#include <map>
#include <string>

namespace hallmark::detail {

/// Shipped generator files (data/groups/*.json) keyed by file stem.
const std::map<std::string, std::string>& embeddedGroupFiles();

/// Shipped character tables (data/tables/*.json) keyed by file stem.
const std::map<std::string, std::string>& embeddedTableFiles();

/// Shipped parameter manifests (data/lie_grid.json) keyed by file stem.
const std::map<std::string, std::string>& embeddedManifestFiles();

}  // namespace hallmark::detail
