#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "qvac/mirror.hpp"

namespace qvac {

// Environment variable naming a preset file that replaces the built-in catalog.
inline constexpr const char* kMaterialsEnvVar = "QVAC_MATERIALS";

// Contents of the shipped data/materials.txt.
inline constexpr const char* kDefaultMaterials =
    "# name = plasma wavelength in nm\n"
    "gold = 136\n"
    "copper = 136\n";

// Plasma-model presets: lines of the form `name = <plasma wavelength in nm>`.
class MaterialCatalog {
public:
    static MaterialCatalog parse(std::istream& in);
    static MaterialCatalog builtin();
    // $QVAC_MATERIALS if set, otherwise the built-in catalog.
    static MaterialCatalog from_environment();

    bool contains(const std::string& name) const { return presets_.count(name) != 0; }
    double plasma_wavelength_nm(const std::string& name) const;
    const std::map<std::string, double>& presets() const { return presets_; }

private:
    std::map<std::string, double> presets_;
};

// "perfect", "plasma:<nm>" or a preset name.
MirrorModel parse_material(const std::string& text, const MaterialCatalog& catalog);

}  // namespace qvac
