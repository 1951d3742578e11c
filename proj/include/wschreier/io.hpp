#ifndef WSCHREIER_IO_HPP
#define WSCHREIER_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "wschreier/wact.hpp"

namespace wschreier::io {

/// `.mon`: order, then the row-major Cayley table; `#` starts a comment;
/// the identity must be element 0.
FiniteMonoid read_monoid(const std::filesystem::path& file);
void write_monoid(const std::filesystem::path& file, const FiniteMonoid& m);

/// `.hom`: two paths (domain and codomain `.mon`, relative to the `.hom`
/// file), then the map.
MonoidHom read_hom(const std::filesystem::path& file);
void write_hom(const std::filesystem::path& file, const MonoidHom& hom,
               const std::string& dom_rel, const std::string& cod_rel);

/// `.ext`: six paths, one per line: the `.mon` files for N, G, H and the
/// `.hom` files for k, e, s. Validates the extension axioms on read.
SplitExtension read_extension(const std::filesystem::path& file);

/// Writes base.ext together with base.{N,G,H}.mon and base.{k,e,s}.hom
/// next to it; `base` is the .ext path with its extension dropped.
void write_extension(const std::filesystem::path& ext_file,
                     const SplitExtension& ext);

/// `.quot`: two `.mon` paths, then |H| rows of |N| class ids.
/// Rejects non-admissible partitions.
AdmissibleQuotient read_quotient(const std::filesystem::path& file);
void write_quotient(const std::filesystem::path& file,
                    const AdmissibleQuotient& q, const std::string& n_rel,
                    const std::string& h_rel);

/// `.act`: |H| rows of |N| entries; plain ids give a PreAction, `c:`
/// prefixed ids a class-valued table.
struct ActFile {
  bool class_valued = false;
  std::vector<std::vector<int>> entries;
};

ActFile read_action(const std::filesystem::path& file);
void write_preaction(const std::filesystem::path& file, const PreAction& a);
void write_action_class(const std::filesystem::path& file,
                        const ActionClass& a);

/// FNV-1a digest of the file bytes, as a hex string.
std::string file_digest(const std::filesystem::path& file);

}  // namespace wschreier::io

#endif
