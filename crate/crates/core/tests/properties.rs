use proptest::prelude::*;

use gcwe_core::genetic_code::codon_labels;
use gcwe_core::genetic_code::Position;
use gcwe_core::misread::{allowed, CrystalTensorOp};
use gcwe_core::tensor::{component_of, couple, SignPath};
use gcwe_core::{Codon, CouplingOrder, CrystalState, HalfInt, MisreadSpec, RankRules};

fn state() -> impl Strategy<Value = CrystalState> {
    (0..=20i32)
        .prop_flat_map(|j2| (Just(j2), 0..=j2))
        .prop_map(|(j2, k)| CrystalState::from_twice(j2, j2 - 2 * k).unwrap())
}

fn path() -> impl Strategy<Value = SignPath> {
    prop::collection::vec(state(), 1..=5).prop_map(|f| SignPath::new(f).unwrap())
}

fn codon() -> impl Strategy<Value = Codon> {
    (0usize..64).prop_map(Codon::from_index)
}

fn order() -> impl Strategy<Value = CouplingOrder> {
    prop_oneof![Just(CouplingOrder::StateFirst), Just(CouplingOrder::OperatorFirst)]
}

proptest! {
    #[test]
    fn half_int_roundtrip(t in -1000i32..1000) {
        let x = HalfInt::from_twice(t);
        prop_assert_eq!(x.to_string().parse::<HalfInt>().unwrap(), x);
        prop_assert_eq!(x - x, HalfInt::ZERO);
        prop_assert_eq!(-(-x), x);
    }

    #[test]
    fn crystal_inverse_laws(s in state()) {
        if let Some(up) = s.raise() {
            prop_assert_eq!(up.lower(), Some(s));
            prop_assert_eq!(up.crystal_casimir(), s.crystal_casimir());
        }
        if let Some(down) = s.lower() {
            prop_assert_eq!(down.raise(), Some(s));
        }
        prop_assert_eq!(s.raising_length() + s.lowering_length(), s.j().twice() as u32);
    }

    #[test]
    fn tensor_inverse_laws(p in path()) {
        if let Some(up) = p.raise() {
            prop_assert_eq!(up.lower(), Some(p.clone()));
            prop_assert_eq!(up.weight(), p.weight() + HalfInt::ONE);
        }
        if let Some(down) = p.lower() {
            prop_assert_eq!(down.raise(), Some(p.clone()));
        }
    }

    #[test]
    fn component_is_consistent(p in path()) {
        let (id, m) = component_of(&p);
        prop_assert_eq!(m, p.weight());
        prop_assert!(id.highest_weight.is_highest_weight());
        prop_assert_eq!(id.j, id.highest_weight.weight());
        prop_assert!(m.abs() <= id.j);
        let bottom = (id.j + m).twice() / 2;
        prop_assert_eq!(p.lowering_length() as i32, bottom);
    }

    #[test]
    fn couple_adds_weights(a in state(), b in state(), o in order()) {
        let (j, m) = couple(a.j(), a.m(), b.j(), b.m(), o).unwrap();
        prop_assert_eq!(m, a.m() + b.m());
        prop_assert!(m.abs() <= j);
        prop_assert!(j <= a.j() + b.j());
        prop_assert!(j >= (a.j() - b.j()).abs());
    }

    #[test]
    fn rank_zero_is_identity(c in codon(), o in order()) {
        let q = codon_labels(c).quad;
        prop_assert_eq!(gcwe_core::misread::we_apply(q, CrystalTensorOp::IDENTITY, o).unwrap(), q);
    }

    #[test]
    fn misreading_weight_bookkeeping(c in codon(), pos in 1u8..=3, o in order()) {
        let position = Position::new(pos).unwrap();
        for spec in MisreadSpec::applicable(c, position) {
            let r = allowed(c, spec, &RankRules::default(), o).unwrap();
            let src = codon_labels(c).quad;
            prop_assert_eq!(r.predicted.m_h - src.m_h, r.operator.m_h);
            prop_assert_eq!(r.predicted.m_v - src.m_v, r.operator.m_v);
            if spec.kind().is_transversion() {
                prop_assert!(spec.to().weight_h() <= spec.from().weight_h());
            }
            prop_assert_eq!(r.target_codon.at(position), spec.to());
        }
    }
}
