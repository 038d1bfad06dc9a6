#include "soficlab/microstate.hpp"

#include <cmath>
#include <stdexcept>

namespace soficlab {

namespace {

struct WordWalker {
  const GroupModel& model;
  const std::vector<GroupModel::Element>& gens;
  const std::vector<ComplexMatrix>& mats;
  std::vector<GroupModel::Element> gen_elems;   // generators and inverses
  std::vector<ComplexMatrix> gen_mats;
  MicrostateReport report;

  // Letters: 2k is generator k, 2k+1 its inverse. A letter may not follow its
  // own inverse (free reduction).
  void dfs(unsigned remaining, int last_letter, const GroupModel::Element& elem,
           const ComplexMatrix& mat, std::string word_text) {
    if (remaining == 0) return;
    for (std::size_t l = 0; l < gen_elems.size(); ++l) {
      if (last_letter >= 0 && (l ^ 1u) == static_cast<std::size_t>(last_letter)) continue;
      GroupModel::Element next = model.multiply(elem, gen_elems[l]);
      ComplexMatrix next_mat = mat * gen_mats[l];
      std::string text = word_text.empty() ? letter_name(l) : word_text + "*" + letter_name(l);
      visit(next, next_mat, text);
      dfs(remaining - 1, static_cast<int>(l), next, next_mat, text);
    }
  }

  std::string letter_name(std::size_t l) const {
    std::string base = model.describe(gens[l / 2]);
    return l % 2 == 0 ? base : base + "^-1";
  }

  void visit(const GroupModel::Element& elem, const ComplexMatrix& mat, const std::string& text) {
    ++report.words_checked;
    Tri id = model.is_identity(elem);
    if (id == Tri::Unknown) {
      ++report.oracle_failures;
      if (report.failed_words.size() < 16) report.failed_words.push_back(text);
      return;
    }
    double tau_abs = std::abs(normalized_trace(mat));
    double contribution =
        id == Tri::True ? std::abs(normalized_trace(mat) - std::complex<double>(1.0)) : tau_abs;
    if (contribution > report.defect) {
      report.defect = contribution;
      report.worst_word = text;
    }
  }
};

}  // namespace

MicrostateReport microstate_defect(const GroupModel& model,
                                   const std::vector<GroupModel::Element>& generators,
                                   const std::vector<ComplexMatrix>& images,
                                   unsigned max_word_len, bool require_unitary) {
  if (generators.size() != images.size())
    throw std::invalid_argument("one matrix per generator required");
  if (generators.empty()) throw std::invalid_argument("no generators");
  const Eigen::Index dim = images.front().rows();
  for (const auto& m : images) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("all matrices must share one dimension");
    if (require_unitary && !is_unitary(m))
      throw std::domain_error("matrix image is not unitary");
  }

  WordWalker walker{model, generators, images, {}, {}, {}};
  for (std::size_t k = 0; k < generators.size(); ++k) {
    walker.gen_elems.push_back(generators[k]);
    walker.gen_elems.push_back(model.inverse(generators[k]));
    walker.gen_mats.push_back(images[k]);
    walker.gen_mats.push_back(images[k].adjoint());
  }
  ComplexMatrix id_mat = ComplexMatrix::Identity(dim, dim);
  walker.dfs(max_word_len, -1, model.identity(), id_mat, "");
  return walker.report;
}

}  // namespace soficlab
