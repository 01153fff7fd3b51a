import pytest

from algebra.errors import NotProjectiveError, QuantumGroupError, UnmatchedSummandError
from algebra.hopf import h_generator, h_monomial
from algebra.linalg import CycMatrix
from representations.decomposition import (
    TENSOR_TABLE,
    check_tensor_table,
    decompose_rep,
    decompose_tensor,
    format_counts,
    hom_space,
    identify,
    is_indecomposable,
    tensor_table,
)
from representations.repcat import (
    Representation,
    baby_verma_module,
    catalog,
    dual_rep,
    get_module,
    module_label,
    module_radical,
    projective_module,
    qdim,
    qtrace,
    simple_module,
    socle,
    submodule_chain,
    tensor_rep,
    trivial_module,
)
from representations.structure import block_model, check_block_dims, check_radical_ideal, radical


class TestCatalog:
    def test_labels_n3(self):
        assert {m.label: m.dim for m in catalog(3)} == {"3_irr": 3, "6_eve": 6, "6_odd": 6, "2": 2, "1": 1}

    def test_matching_catalog_n3(self, catalog3):
        assert {"3_odd", "3_eve", "Z_1", "Z_2"} <= set(catalog3)

    @pytest.mark.slow
    def test_catalog_n5(self):
        modules = catalog(5)
        assert [m.label for m in modules[:5]] == ["5_irr", "P_4", "P_1", "P_3", "P_2"]
        assert [m.dim for m in modules[:5]] == [5, 10, 10, 10, 10]

    def test_module_labels(self):
        assert module_label(3, "projective", 1) == "6_odd"
        assert module_label(3, "plane", 2) == "3_eve"
        assert module_label(5, "verma", 2) == "Z_2"
        assert module_label(5, "simple", 5) == "5_irr"

    def test_trivial_module(self):
        rep = trivial_module(3)
        assert rep.dim == 1
        assert rep.K == CycMatrix.identity(3, 1)
        assert rep.Xp.is_zero() and rep.Xm.is_zero()

    @pytest.mark.parametrize("label", ["1", "2", "3_irr", "6_odd", "6_eve", "3_odd", "3_eve"])
    def test_relations_hold(self, catalog3, label):
        assert catalog3[label].check_relations().passed

    def test_aliases(self):
        assert get_module("3irr").label == "3_irr"
        assert get_module("6ODD").label == "6_odd"

    def test_unknown_label(self):
        with pytest.raises(QuantumGroupError):
            get_module("7_irr", 3)

    def test_simple_module_range(self):
        with pytest.raises(ValueError):
            simple_module(3, 4)
        with pytest.raises(ValueError):
            projective_module(3, 3)

    def test_wrong_matrices_rejected(self):
        identity = CycMatrix.identity(3, 2)
        with pytest.raises(QuantumGroupError):
            Representation(3, identity, identity, identity)


class TestRepresentation:
    def test_matrix_of_element(self, catalog3):
        rep = catalog3["2"]
        h = h_generator(3, "Xp") * h_generator(3, "Xm")
        assert rep.matrix(h) == rep.Xp @ rep.Xm

    def test_k_spectrum(self, catalog3):
        assert catalog3["2"].k_spectrum() == {1: 1, 2: 1}

    def test_dual_of_simple(self, catalog3):
        dual = dual_rep(catalog3["2"])
        assert dual.check_relations().passed
        assert identify(dual) == "2"


class TestSubmodules:
    def test_socle_of_simple_is_everything(self, catalog3):
        assert len(socle(catalog3["3_irr"])) == 3

    @pytest.mark.parametrize("label,radical_dim", [("6_odd", 5), ("6_eve", 4)])
    def test_radical_of_projectives(self, catalog3, label, radical_dim):
        assert len(module_radical(catalog3[label])) == radical_dim

    @pytest.mark.parametrize("label", ["6_odd", "6_eve"])
    def test_submodule_chain(self, catalog3, label):
        chain = submodule_chain(catalog3[label])
        assert chain.dims[1] == 3
        assert chain.verify().passed

    def test_intermediate_depends_on_parameter(self, catalog3):
        from algebra.linalg import EchelonBasis

        pim = catalog3["6_odd"]
        first = submodule_chain(pim, 0).intermediate
        second = submodule_chain(pim, 1).intermediate
        span = EchelonBasis(3)
        span.extend(first)
        assert not all(span.contains(v) for v in second)

    def test_chain_needs_projective(self, catalog3):
        with pytest.raises(NotProjectiveError):
            submodule_chain(catalog3["3_irr"])


class TestQuantumDimension:
    @pytest.mark.parametrize(
        "label,value", [("1", 1), ("2", -1), ("3_irr", 0), ("6_eve", 0), ("6_odd", 0)]
    )
    def test_qdim(self, catalog3, label, value):
        assert qdim(catalog3[label]) == value

    def test_qtrace_of_unit_is_qdim(self, catalog3):
        rep = catalog3["2"]
        assert qtrace(rep, h_monomial(3, 0, 0, 0)) == qdim(rep)

    def test_qdim_is_multiplicative(self, catalog3):
        product = tensor_rep(catalog3["2"], catalog3["2"])
        assert qdim(product) == qdim(catalog3["2"]) * qdim(catalog3["2"])


class TestDecomposition:
    def test_hom_space_of_simple(self, catalog3):
        assert len(hom_space(catalog3["2"], catalog3["2"])) == 1

    def test_two_times_two(self):
        report = decompose_tensor("2", "2")
        assert report.counts() == {"1": 1, "3_irr": 1}
        assert report.verified

    def test_three_times_three(self):
        report = decompose_tensor("3irr", "3irr")
        assert report.counts() == {"6_odd": 1, "3_irr": 1}

    def test_table_frame(self):
        report = decompose_tensor("2", "3_irr")
        frame = report.table()
        assert list(frame.columns) == ["summand", "multiplicity", "dimension"]
        assert frame.iloc[0]["dimension"] == 6

    def test_strict_decomposition_raises_outside_catalog(self, catalog3):
        candidates = [catalog3["1"]]
        with pytest.raises(UnmatchedSummandError):
            decompose_rep(catalog3["2"], candidates)

    def test_lenient_decomposition_reports_unnamed_summands(self, catalog3):
        report = decompose_rep(catalog3["2"], [catalog3["1"]], strict=False)
        assert [s.label for s in report.summands] == [None]
        assert report.summands[0].certified_indecomposable

    def test_projectives_are_indecomposable(self, catalog3):
        assert is_indecomposable(catalog3["6_eve"])

    def test_direct_sum_is_not_indecomposable(self, catalog3):
        product = tensor_rep(catalog3["2"], catalog3["2"])
        assert not is_indecomposable(product)

    def test_format_counts(self):
        assert format_counts({"3_irr": 2, "1": 1}) == "1 + 2·3_irr"

    def test_tensor_table_rows(self):
        report = check_tensor_table(TENSOR_TABLE[:3])
        assert report.passed, report.failure

    def test_projective_square_splits_into_both_projectives(self):
        report = decompose_tensor("6_eve", "6_eve")
        assert report.verified
        assert report.counts() == {"6_eve": 2, "6_odd": 2, "3_irr": 4}

    def test_projective_rows_follow_from_associativity(self):
        # 6_eve = 2⊗3_irr, so every projective square is (2⊗2)⊗(3_irr⊗3_irr)
        expected = {"6_eve": 2, "6_odd": 2, "3_irr": 4}
        rows = [row for row in TENSOR_TABLE if row[0].startswith("6") and row[1].startswith("6")]
        assert len(rows) == 3
        assert all(counts == expected for _, _, counts in rows)

    @pytest.mark.slow
    @pytest.mark.parametrize("left, right", [("6_eve", "6_odd"), ("6_odd", "6_eve"), ("6_odd", "6_odd")])
    def test_projective_products(self, left, right):
        report = decompose_tensor(left, right)
        assert report.verified
        assert report.counts() == {"6_eve": 2, "6_odd": 2, "3_irr": 4}

    @pytest.mark.slow
    def test_full_tensor_table(self):
        frame = tensor_table()
        assert len(frame) == 12
        assert frame["match"].all()


class TestStructure:
    def test_radical_n3(self):
        report = radical(3)
        assert report.radical_dimension == 13
        assert report.block_dims == [9, 4, 1]
        assert report.semisimple_quotient

    def test_radical_is_ideal(self):
        assert check_radical_ideal(3).passed

    def test_block_model(self):
        model = block_model(3)
        assert model.complex_dim == 27
        assert model.radical_dim == 13
        assert model.simple_block_dims == [9, 4, 1]
        assert check_block_dims(3).passed

    def test_block_model_n5_dimensions(self):
        model = block_model(5)
        assert [b.complex_dim for b in model.blocks] == [25, 50, 50]
        assert model.radical_dim == 70

    @pytest.mark.slow
    def test_radical_n5(self):
        report = radical(5)
        assert report.radical_dimension == 70
        assert report.block_dims == [25, 16, 1, 9, 4]


class TestBabyVerma:
    def test_verma_is_reducible(self):
        rep = baby_verma_module(3, 1)
        assert len(socle(rep)) == 2
        assert rep.label == "Z_1"
