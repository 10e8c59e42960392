#pragma once

#include "strand/tfs/feature_structure.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace strand::lexicon {

struct TemplateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One sign produced by a template. Most templates produce exactly one;
/// `marker` produces a variant per number of composed arguments, told apart
/// by `variant` ("/0", "/1", ...).
struct TemplateSign {
  std::string variant;
  tfs::FeatureStructure fs;
};

/// Template parameters left over after the template took its own keys.
using Params = std::map<std::string, std::string>;

/// Names of the shipped templates.
const std::vector<std::string> &template_names();

/// Builds the signs for `name`, consuming the parameters the template
/// understands from `params`. Throws TemplateError on bad values.
std::vector<TemplateSign> build_template(const tfs::SignaturePtr &sig,
                                         const std::string &name,
                                         Params &params);

/// AVM text of the P0 template for `pform` (no validation).
std::string p0_avm(const std::string &pform);

} // namespace strand::lexicon
