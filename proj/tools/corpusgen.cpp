// Regenerates the golden corpus under corpus/.  Run from the repository
// root:  ./build/tools/ybx_corpusgen [corpus-dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ybx/gallery.hpp"
#include "ybx/json_io.hpp"

using namespace ybx;
namespace gal = ybx::gallery;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& dir, const std::string& name, const json& doc) {
  std::ofstream out(dir / name);
  out << doc.dump(2) << "\n";
  std::cout << "wrote " << (dir / name).string() << "\n";
}

void write_text(const fs::path& dir, const std::string& name, const std::string& text) {
  std::ofstream out(dir / name);
  out << text;
  std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "corpus";
  fs::create_directories(dir);
  fs::create_directories(dir / "golden");
  Field q = Field::rationals();

  for (long n = 1; n <= 3; ++n)
    write(dir, "flip" + std::to_string(n) + ".json",
          pair_to_json(gal::flip_pair(q, n)));
  write(dir, "z3_shift.json", pair_to_json(gal::cyclic_shift_pair(q, 3)));
  write(dir, "z3_translation.json",
        pair_to_json(gal::cyclic_translation_pair(q, 3)));
  write(dir, "lyubashenko_involution.json",
        pair_to_json(gal::involution_pair(q, {1, 0, 2})));
  write(dir, "s3_conjugation.json",
        pair_to_json(gal::conjugation_solution(q, gal::s3_table(), gal::s3_labels())));

  write(dir, "prim_leibniz_d2.json", prim_to_json(gal::leibniz_params_d2(q)));
  write(dir, "prim_associative_d2.json", prim_to_json(gal::associative_params_d2(q)));
  write(dir, "pair_leibniz_d2.json",
        pair_to_json(prim_to_solution(gal::leibniz_params_d2(q))));

  write(dir, "brace_trivial_z2.json",
        brace_to_json(trivial_brace(group_algebra(q, gal::cyclic_table(2)))));
  write(dir, "brace_z4_klein.json", brace_to_json(gal::z4_klein_brace(q)));
  write(dir, "operator_conjugation_s3.json",
        operator_to_json(gal::conjugation_operator(q, gal::s3_table(), gal::s3_labels())));

  // Fault-injected negatives, one per verifier.
  write(dir, "neg_braid_violation.json",
        pair_to_json(gal::permutation_pair(q, {1, 0, 2}, {0, 2, 1})));
  {
    // r moves e0 (x) e0 off the group-like diagonal: not a coalgebra morphism.
    Coalgebra x = make_setlike(q, {"x0", "x1"});
    LinMap r = LinMap::identity(q, 4);
    r.set(0, 0, Scalar::rational(0));
    r.set(1, 0, Scalar::rational(1));
    r.set(0, 1, Scalar::rational(1));
    r.set(1, 1, Scalar::rational(0));
    json doc = field_to_json(q);
    doc["coalgebra"] = coalgebra_to_json(x);
    doc["r"] = linmap_to_json(r);
    write(dir, "neg_not_automorphism.json", doc);
  }
  {
    HopfAlgebra z4 = group_algebra(q, gal::cyclic_table(4));
    HopfAlgebra bad(z4.coalgebra(), z4.m(), z4.unit(), LinMap::identity(q, 4));
    write(dir, "neg_hopf_bad_antipode_z4.json", hopf_to_json(bad));
  }
  {
    // circle operation a o b = a + 3b on Z/4: not associative, so the
    // second Hopf structure already fails.
    HopfAlgebra z4 = group_algebra(q, gal::cyclic_table(4));
    LinMap mo(q, 16, 4);
    for (long a = 0; a < 4; ++a)
      for (long b = 0; b < 4; ++b) mo.set((a + 3 * b) % 4, a * 4 + b, Scalar::rational(1));
    Brace bad(z4.coalgebra(), z4.m(), z4.unit(), z4.antipode(), mo, z4.unit(),
              LinMap::identity(q, 4));
    write(dir, "neg_brace_bad_circle_z4.json", brace_to_json(bad));
  }
  {
    PrimParams bad{3, LinMap::identity(q, 3), LinMap::identity(q, 3),
                   gal::nonleibniz_bracket_d3(q), LinMap::zero(q, 9, 3)};
    write(dir, "neg_prim_nonleibniz_d3.json", prim_to_json(bad));
  }
  write_text(dir, "neg_malformed.json", "{ \"field\": \"Q\", \"coalgebra\": [[\n");

  // Frozen exhaustive search results.
  for (int p : {2, 3}) {
    std::string lines;
    SearchOptions so;
    so.exhaustive = true;
    search_primitive(Field::mod(p), 1, so, [&](const PrimParams& t, std::uint64_t i) {
      json doc = prim_to_json(t);
      doc["index"] = i;
      lines += doc.dump() + "\n";
      return true;
    });
    write_text(dir / "golden", "search_f" + std::to_string(p) + "_d1.jsonl", lines);
  }
  return 0;
}
