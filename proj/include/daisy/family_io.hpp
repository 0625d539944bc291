#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "daisy/set_family.hpp"

namespace daisy {

// Text form: first line "n r", then one member per line as space-separated
// increasing elements. JSON form: {"n": int, "r": int, "sets": [[...], ...]}.
// Both readers reject duplicates and wrong-size sets with InvalidInput.

SetFamily read_family_text(std::istream& in);
void write_family_text(std::ostream& out, const SetFamily& f);

SetFamily read_family_json(std::istream& in);
void write_family_json(std::ostream& out, const SetFamily& f);

/// Dispatches on content: a leading '{' selects JSON.
SetFamily load_family(const std::filesystem::path& path);

}  // namespace daisy
