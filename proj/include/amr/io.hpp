#pragma once

#include "amr/abstraction.hpp"
#include "amr/kmts.hpp"
#include "amr/kripke.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace amr {

struct ModelParseError : std::runtime_error {
    int line;
    ModelParseError(std::string msg, int line_) : std::runtime_error(std::move(msg)), line(line_) {}
};

/// A parsed model file: a concrete model when the file has a `trans:`
/// section, a partial model when it has `must:`/`may:` sections. KMTS files
/// may carry a `blocks:` section naming the concrete states each abstract
/// state stands for.
struct ParsedModel {
    std::optional<KripkeStructure> ks;
    std::optional<Kmts> kmts;
    std::optional<AbstractionMap> blocks;

    bool is_ks() const { return ks.has_value(); }
};

/// Parses the model format described in docs/formats.md. Invalid models
/// (failing validate_ks / validate_kmts) are rejected with the first
/// violation; ids in the reserved `_n` namespace are rejected outright.
ParsedModel parse_model(const std::string& text);
ParsedModel load_model(const std::string& path);

std::string print_ks(const KripkeStructure& m);
std::string print_kmts(const Kmts& m, const AbstractionMap* blocks = nullptr);

/// Partition files: one `block: member member ...` line per block.
AbstractionMap parse_partition(const std::string& text);
AbstractionMap load_partition(const std::string& path);
std::string print_partition(const AbstractionMap& p);

} // namespace amr
