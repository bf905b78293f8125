#pragma once

#include <string>

#include "inca/bridge/framework.h"
#include "inca/io/document.h"

namespace inca::io {

// Constants for grounding: everything declared under #sorts (with its
// role) followed by every constant written in the #am section.
ConstantPool constantsOf(const KBDocument& doc);

// Id of one ground instance: the label itself for a ground statement,
// otherwise "label[c1,c2,...]" with the constants bound to the statement's
// variables in first-occurrence order.
std::string instanceId(const std::string& label, const std::vector<std::string>& variables,
                       const Binding& binding);

// Grounds every #am statement over constantsOf(doc).
am::AMProgram groundProgram(const KBDocument& doc, const ConstantPool& pool);

em::EMKnowledgeBase environmentalModel(const KBDocument& doc);
bridge::AnnotationFunction annotations(const KBDocument& doc);

// The full framework. Errors from the engine layers propagate
// (std::invalid_argument for a contradictory strict part, GroundednessError
// for annotation atoms outside a declared universe, CapacityError, ...).
bridge::InCAFramework assemble(const KBDocument& doc, bridge::FrameworkOptions options = {});

}  // namespace inca::io
