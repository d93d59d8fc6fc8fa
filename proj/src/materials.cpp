#include "qvac/materials.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "qvac/errors.hpp"

namespace qvac {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_wavelength(const std::string& text, const std::string& context)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError(context + ": '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(value) || value <= 0.0) {
        throw DomainError(context + ": plasma wavelength must be a positive number of nm, got '" + text + "'");
    }
    return value;
}

}  // namespace

MaterialCatalog MaterialCatalog::parse(std::istream& in)
{
    MaterialCatalog catalog;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = "material presets line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError(where + ": expected 'name = <plasma wavelength in nm>'");
        }
        const std::string name = trim(line.substr(0, eq));
        if (name.empty() || name.find_first_of(" \t:") != std::string::npos || name == "perfect") {
            throw DomainError(where + ": invalid preset name '" + name + "'");
        }
        catalog.presets_[name] = parse_wavelength(trim(line.substr(eq + 1)), where);
    }
    return catalog;
}

MaterialCatalog MaterialCatalog::builtin()
{
    std::istringstream in(kDefaultMaterials);
    return parse(in);
}

MaterialCatalog MaterialCatalog::from_environment()
{
    const char* path = std::getenv(kMaterialsEnvVar);
    if (path == nullptr || *path == '\0') {
        return builtin();
    }
    std::ifstream in(path);
    if (!in) {
        throw DomainError(std::string("cannot open material presets '") + path + "' named by " + kMaterialsEnvVar);
    }
    return parse(in);
}

double MaterialCatalog::plasma_wavelength_nm(const std::string& name) const
{
    const auto it = presets_.find(name);
    if (it == presets_.end()) {
        throw DomainError("unknown material preset '" + name + "'");
    }
    return it->second;
}

MirrorModel parse_material(const std::string& text, const MaterialCatalog& catalog)
{
    if (text == "perfect") {
        return MirrorModel::perfect();
    }
    constexpr std::string_view prefix = "plasma:";
    if (text.rfind(prefix, 0) == 0) {
        const double nm = parse_wavelength(text.substr(prefix.size()), "material '" + text + "'");
        return MirrorModel::plasma_from_wavelength(nm * 1e-9);
    }
    return MirrorModel::plasma_from_wavelength(catalog.plasma_wavelength_nm(text) * 1e-9);
}

}  // namespace qvac
