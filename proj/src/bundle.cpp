#include "cgedit/bundle.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "cgedit/digest.hpp"
#include "cgedit/store_io.hpp"

namespace fs = std::filesystem;

namespace cgedit {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError(tmp.string() + ": cannot write");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw InputError(tmp.string() + ": write failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError(path.string() + ": " + ec.message());
  }
}

namespace {

template <typename F>
auto parsing(const fs::path& path, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const std::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

template <typename F>
auto with_file(const fs::path& path, F&& parse) {
  return parsing(path, read_file(path), std::forward<F>(parse));
}

constexpr const char* kAnnotations = "annotations.tsv";
constexpr const char* kSegments = "segments.tsv";
constexpr const char* kOntology = "ontology.txt";
constexpr const char* kScripts = "scripts.txt";
constexpr const char* kDigests = "digests.txt";

std::map<std::string, std::string> contents_of(const Database& db) {
  return {{kAnnotations, save_annotations(db.store)},
          {kSegments, format_segments(db.store)},
          {kOntology, format_ontology(db.ontology)},
          {kScripts, format_scripts(db.scripts)}};
}

}  // namespace

Database ingest(std::span<const fs::path> annotation_files, const fs::path& ontology_file,
                const fs::path& script_file) {
  Database db;
  db.ontology = with_file(ontology_file, [](const std::string& t) { return parse_ontology(t); });
  db.scripts = with_file(script_file, [](const std::string& t) { return parse_scripts(t); });
  for (const auto& file : annotation_files)
    with_file(file, [&](const std::string& t) {
      load_annotations(t, db.store);
      return 0;
    });
  return db;
}

std::map<std::string, std::string> bundle_digests(const Database& db) {
  std::map<std::string, std::string> out;
  for (const auto& [name, text] : contents_of(db)) out[name] = digest_hex(text);
  return out;
}

void write_bundle(const Database& db, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError(dir.string() + ": " + ec.message());

  std::ostringstream digests;
  for (const auto& [name, text] : contents_of(db)) {
    write_file_atomic(dir / name, text);
    digests << name << ' ' << digest_hex(text) << '\n';
  }
  write_file_atomic(dir / kDigests, digests.str());
}

Database load_bundle(const fs::path& dir) {
  Database db;
  const std::string annotations = read_file(dir / kAnnotations);
  const std::string ontology = read_file(dir / kOntology);
  const std::string scripts = read_file(dir / kScripts);
  const std::string segments = read_file(dir / kSegments);

  std::map<std::string, std::string> expected;
  {
    std::istringstream in(read_file(dir / kDigests));
    for (std::string name, hex; in >> name >> hex;) expected[name] = hex;
  }
  const std::map<std::string, const std::string*> files = {
      {kAnnotations, &annotations}, {kOntology, &ontology}, {kScripts, &scripts}, {kSegments, &segments}};
  for (const auto& [name, text] : files) {
    auto it = expected.find(name);
    if (it == expected.end()) throw InputError((dir / kDigests).string() + ": no digest for " + name);
    if (it->second != digest_hex(*text)) throw InputError((dir / name).string() + ": digest mismatch");
  }

  db.ontology = parsing(dir / kOntology, ontology, [](const std::string& t) { return parse_ontology(t); });
  db.scripts = parsing(dir / kScripts, scripts, [](const std::string& t) { return parse_scripts(t); });
  db.store = parsing(dir / kAnnotations, annotations, [](const std::string& t) { return load_annotations(t); });
  return db;
}

}  // namespace cgedit
