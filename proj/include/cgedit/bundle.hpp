#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgedit/interval_store.hpp"
#include "cgedit/ontology.hpp"
#include "cgedit/script.hpp"

namespace cgedit {

/// Everything a query needs: the annotated footage, the type hierarchy and
/// the script library.
struct Database {
  Store store;
  Ontology ontology;
  ScriptDb scripts;
};

/// I/O failure or malformed input file; the message names the file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary sibling then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Loads and validates the source files. Annotation files are inserted in
/// the order given.
Database ingest(std::span<const std::filesystem::path> annotation_files,
                const std::filesystem::path& ontology_file, const std::filesystem::path& script_file);

/// Bundle directory layout:
///   annotations.tsv  raw log (replayed on load)
///   segments.tsv     normalized segments, for inspection and `oracle`
///   ontology.txt, scripts.txt
///   digests.txt      `<file> <fnv1a-64>` per file above
void write_bundle(const Database& db, const std::filesystem::path& dir);

/// Throws InputError if a file is missing, malformed or fails its digest.
Database load_bundle(const std::filesystem::path& dir);

/// File name -> digest of its canonical contents.
std::map<std::string, std::string> bundle_digests(const Database& db);

}  // namespace cgedit
