#include <gtest/gtest.h>

#include "isodim/classify.hpp"
#include "isodim/dimension.hpp"
#include "isodim/errors.hpp"
#include "isodim/oracle.hpp"
#include "isodim/verify.hpp"
#include "test_util.hpp"

namespace isodim {
namespace {

using testing::gf;
using testing::mat;
using testing::q;
using testing::vec;

TEST(IsomorphicDimension, Examples) {
  const auto w = isomorphic_dimension(Space::full(q(), 4));
  EXPECT_EQ(w.dim, 4u);
  EXPECT_EQ(w.iso.columns(), Matrix::identity(4, q()));

  const auto z = isomorphic_dimension(Space::zero(gf(3), 2));
  EXPECT_EQ(z.dim, 0u);
  EXPECT_EQ(z.iso.domain_dim(), 0u);

  const std::vector<Vector> vs = {vec(gf(2), {1, 1, 0}), vec(gf(2), {0, 1, 1}),
                                  vec(gf(2), {1, 0, 1})};
  const auto d = isomorphic_dimension(Space::span(gf(2), 3, vs));
  EXPECT_EQ(oracle::oracle_span(gf(2), 3, vs).size(), 1u << d.dim);
  EXPECT_EQ(d.dim, 2u);
  EXPECT_TRUE(is_isomorphism(d.iso));
}

TEST(ExtendInjective, Examples) {
  const auto s = gf(2);
  const auto empty = LinearMap::from_images(s, 2, {}, Space::full(s, 2));
  const auto one = extend_injective(empty, vec(s, {1, 0}));
  EXPECT_EQ(one.domain_dim(), 1u);
  EXPECT_TRUE(is_injective(one));

  const auto f = LinearMap::from_images(s, 2, {vec(s, {1, 1})}, Space::full(s, 2));
  const auto g = extend_injective(f, vec(s, {1, 0}));
  EXPECT_TRUE(is_isomorphism(g));
  EXPECT_THROW(extend_injective(f, vec(s, {1, 1})), AlreadyInImageError);

  const auto line = Space::span(s, 2, {vec(s, {1, 1})});
  EXPECT_THROW(extend_injective(LinearMap::from_images(s, 2, {}, line), vec(s, {1, 0})),
               NotMemberError);
  const auto dup = LinearMap::from_images(s, 2, {vec(s, {1, 1}), vec(s, {1, 1})});
  EXPECT_THROW(extend_injective(dup, vec(s, {1, 0})), NotInjectiveError);
}

TEST(InjectiveSequence, Examples) {
  EXPECT_EQ(build_injective_sequence(Space::zero(q(), 3)).length(), 1u);

  const auto seq = build_injective_sequence(Space::full(gf(5), 2));
  ASSERT_EQ(seq.transcript().size(), 2u);
  EXPECT_EQ(seq.transcript()[0].vector, vec(gf(5), {1, 0}));
  EXPECT_EQ(seq.transcript()[1].vector, vec(gf(5), {0, 1}));

  const auto s = gf(2);
  const auto v = Space::span(s, 3, {vec(s, {1, 0, 1}), vec(s, {0, 1, 1})});
  const auto sq = build_injective_sequence(v);
  ASSERT_EQ(sq.transcript().size(), 2u);
  EXPECT_EQ(sq.transcript()[0].vector, vec(s, {1, 0, 1}));
  EXPECT_EQ(sq.transcript()[1].vector, vec(s, {0, 1, 1}));
}

TEST(InjectiveSequence, ChainInvariants) {
  for (const auto& spec : verify::default_fields()) {
    verify::Generator gen(spec, 17);
    for (int t = 0; t < 80; ++t) {
      const Space v = gen.space(gen.uniform(0, 6));
      const auto seq = build_injective_sequence(v);
      EXPECT_EQ(seq.length(), v.dim() + 1);
      for (std::size_t k = 0; k < seq.length(); ++k) {
        const auto fk = seq.map_at(k);
        EXPECT_TRUE(is_injective(fk));
        EXPECT_EQ(image(fk).dim(), k);
        EXPECT_LE(fk.domain_dim(), v.dim());
        if (k + 1 < seq.length()) {
          const auto next = seq.map_at(k + 1);
          EXPECT_EQ(compose(next, embed_truncate(k, k + 1, spec)).columns(), fk.columns());
          EXPECT_TRUE(image(fk).is_subspace_of(image(next)));
          EXPECT_FALSE(image(fk) == image(next));
        }
      }
      EXPECT_TRUE(is_isomorphism(seq.map_at(v.dim())));
    }
  }
}

TEST(Extraction, Examples) {
  const auto s = gf(2);
  const auto basis = extract_basis_from_surjective({vec(s, {1, 0}), vec(s, {0, 1})},
                                                   Space::full(s, 2));
  EXPECT_EQ(basis.kept, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(basis.steps.empty());

  const auto ex = extract_basis_from_surjective(
      {vec(s, {1, 0}), vec(s, {0, 1}), vec(s, {1, 1})}, Space::full(s, 2));
  EXPECT_EQ(ex.kept, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(ex.steps.size(), 1u);
  EXPECT_EQ(ex.steps[0].kernel_vector, vec(s, {1, 1, 1}));
  EXPECT_EQ(ex.steps[0].dropped, 2u);

  const auto exq = extract_basis_from_surjective(
      {vec(q(), {1, 0}), vec(q(), {2, 0}), vec(q(), {0, 1})}, Space::full(q(), 2));
  EXPECT_EQ(exq.kept, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(exq.steps.size(), 1u);
  EXPECT_EQ(exq.steps[0].kernel_vector, vec(q(), {-2, 1, 0}));
  EXPECT_EQ(exq.steps[0].dropped, 1u);

  EXPECT_THROW(extract_basis_from_surjective({vec(s, {1, 1})}, Space::full(s, 2)),
               NotSurjectiveError);
}

TEST(Extension, Examples) {
  const auto s = gf(2);
  EXPECT_TRUE(extend_injective_to_basis({vec(s, {0, 1}), vec(s, {1, 0})}, Space::full(s, 2))
                  .appended.empty());
  const auto ext = extend_injective_to_basis({vec(s, {1, 1})}, Space::full(s, 2));
  ASSERT_EQ(ext.appended.size(), 1u);
  EXPECT_EQ(ext.appended[0], vec(s, {1, 0}));
  const auto e2 = extend_injective_to_basis({}, Space::full(s, 2));
  EXPECT_EQ(e2.appended, (std::vector<Vector>{vec(s, {1, 0}), vec(s, {0, 1})}));
  EXPECT_THROW(extend_injective_to_basis({vec(s, {1, 1}), vec(s, {1, 1})}, Space::full(s, 2)),
               NotInjectiveError);
  EXPECT_THROW(extend_injective_to_basis({vec(s, {1, 0})},
                                         Space::span(s, 2, {vec(s, {1, 1})})),
               NotMemberError);
}

TEST(RankNullity, Examples) {
  const auto a = rank_nullity(LinearMap::identity(3, q()));
  EXPECT_EQ(std::tuple(a.kernel_dim, a.image_dim, a.domain_dim), std::tuple(0u, 3u, 3u));
  const auto b = rank_nullity(LinearMap::from_matrix(Matrix(q(), 2, 2)));
  EXPECT_EQ(std::tuple(b.kernel_dim, b.image_dim, b.domain_dim), std::tuple(2u, 0u, 2u));
  const auto c = rank_nullity(LinearMap::from_matrix(mat(gf(2), 2, {{1, 1}})));
  EXPECT_EQ(std::tuple(c.kernel_dim, c.image_dim, c.domain_dim), std::tuple(1u, 1u, 2u));
}

TEST(DimensionProperties, ProceduresProduceBases) {
  for (const auto& spec : verify::default_fields()) {
    verify::Generator gen(spec, 29);
    for (int t = 0; t < 80; ++t) {
      const Space v = gen.space(gen.uniform(0, 5));
      const auto spanning = gen.spanning_list(v, v.dim() + gen.uniform(0, 3));
      const auto ex = extract_basis_from_surjective(spanning, v);
      std::vector<Vector> kept;
      for (auto i : ex.kept) kept.push_back(spanning[i]);
      EXPECT_TRUE(classify(kept, v).basis);
      EXPECT_EQ(kept.size(), v.dim());

      const auto injective = gen.injective_list(v, gen.uniform(0, v.dim()));
      const auto ext = extend_injective_to_basis(injective, v);
      auto combined = injective;
      combined.insert(combined.end(), ext.appended.begin(), ext.appended.end());
      EXPECT_TRUE(classify(combined, v).basis);
      EXPECT_EQ(combined.size(), v.dim());
    }
  }
}

// injective/surjective maps between subspaces exist exactly when the dimensions allow
TEST(DimensionProperties, EmbeddingsAndProjectionsBetweenSpaces) {
  for (const auto& spec : verify::default_fields()) {
    verify::Generator gen(spec, 31);
    for (int t = 0; t < 80; ++t) {
      const Space u = gen.space(gen.uniform(0, 4));
      const Space v = gen.space(gen.uniform(0, 4));
      const auto wu = isomorphic_dimension(u), wv = isomorphic_dimension(v);
      // U -> F^dimU -> F^dimV -> V, with U's coordinates read through the inverse witness
      const auto to_coords = inverse(wu.iso);
      const auto h = compose(wv.iso, compose(embed_truncate(u.dim(), v.dim(), spec), to_coords));
      // restrict h to U through U's witness so injectivity is measured on U
      const auto on_u = compose(h, wu.iso).with_codomain(v);
      if (u.dim() <= v.dim()) EXPECT_TRUE(is_injective(on_u));
      if (u.dim() >= v.dim()) EXPECT_TRUE(is_surjective(on_u));
      for (int k = 0; k < 5; ++k) {
        std::vector<Vector> images;
        for (std::size_t i = 0; i < u.dim(); ++i) images.push_back(gen.member(v));
        const auto g = LinearMap::from_images(spec, v.ambient_dim(), images, v);
        if (u.dim() > v.dim()) EXPECT_FALSE(is_injective(g));
        if (u.dim() < v.dim()) EXPECT_FALSE(is_surjective(g));
      }
    }
  }
}

}  // namespace
}  // namespace isodim
