use std::collections::BTreeMap;

use gwcurves::newton::preset;
use gwcurves::notation::{parse_gw_element, parse_gw_expression};
use gwcurves::poly::{ExtensionSign, Monomial};
use gwcurves::wallcross::{build_tables, build_tables_from_bases, wall_cross_step, InvariantTable, SurfaceChain};
use gwcurves::{BetaPolynomial, Error, GwElement};

/// `c * Σ b_{i1}...b_{ik}` over `k`-subsets of `1..=g`, in the ASCII notation.
fn sym(c: i64, k: usize, g: u32) -> String {
    fn subsets(from: u32, g: u32, k: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in from..=g {
            acc.push(i);
            subsets(i + 1, g, k, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    subsets(1, g, k, &mut Vec::new(), &mut all);
    all.iter()
        .map(|s| {
            let m: Vec<String> = s.iter().map(|i| format!("b{i}")).collect();
            format!("{c}*{}", m.join("*"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn golden() -> Vec<(&'static str, Vec<String>)> {
    vec![
        (
            "BlF1",
            vec![
                "2h + 8*<1>".into(),
                "2h + 6*<1> + b1".into(),
                "2h + 4*<1> + b1 + b2".into(),
                "2h + 2*<1> + b1 + b2 + b3".into(),
            ],
        ),
        (
            "F1_4_2E",
            vec![
                "24h + 48*<1>".into(),
                "24h + 32*<1> + 8*b1".into(),
                "24h + 20*<1> + 6*b1 + 6*b2 + b1*b2".into(),
                format!("24h + 12*<1> + {} + {}", sym(4, 1, 3), sym(1, 2, 3)),
                format!("24h + 8*<1> + {} + {}", sym(2, 1, 4), sym(1, 2, 4)),
            ],
        ),
        (
            "p2:4",
            vec![
                "190h + 240*<1>".into(),
                "190h + 144*<1> + 48*b1".into(),
                "190h + 80*<1> + 32*b1 + 32*b2 + 8*b1*b2".into(),
                format!("190h + 40*<1> + {} + {} + b1*b2*b3", sym(20, 1, 3), sym(6, 2, 3)),
                format!("190h + 16*<1> + {} + {} + {}", sym(12, 1, 4), sym(4, 2, 4), sym(1, 3, 4)),
                format!("190h + {} + {} + {}", sym(8, 1, 5), sym(2, 2, 5), sym(1, 3, 5)),
            ],
        ),
    ]
}

fn known_bases() -> Vec<GwElement> {
    ["190h + 240*<1>", "24h + 48*<1>", "2h + 8*<1>", "<1>"].iter().map(|s| parse_gw_element(s).unwrap()).collect()
}

fn tables() -> Vec<InvariantTable> {
    build_tables_from_bases(&SurfaceChain::quartic(), &known_bases()).unwrap()
}

fn table<'a>(tables: &'a [InvariantTable], name: &str) -> &'a InvariantTable {
    let poly = preset(name).unwrap();
    tables.iter().find(|t| t.polygon == poly).unwrap()
}

fn check_golden(tables: &[InvariantTable]) {
    let mut rows = 0;
    for (name, expected) in golden() {
        let t = table(tables, name);
        assert_eq!(t.rows.len(), expected.len(), "{name}");
        for (s, text) in expected.iter().enumerate() {
            let want = parse_gw_expression(text).unwrap();
            let got = t.row(s as u32).unwrap();
            assert!(got.is_equivalent(&want), "{name} s={s}: got {got}, want {want}");
            rows += 1;
        }
    }
    assert_eq!(rows, 15);
}

#[test]
fn fifteen_rows_from_known_bases() {
    check_golden(&tables());
}

#[test]
fn fifteen_rows_from_tropical_bases() {
    check_golden(&build_tables(&SurfaceChain::quartic()).unwrap());
}

#[test]
fn rows_are_monic_with_constant_rank() {
    let tables = tables();
    for t in &tables {
        let g = t.polygon.interior_count() as u32;
        let rank0 = t.row(0).unwrap().rank_profile();
        for row in &t.rows {
            assert_eq!(row.value.rank_profile(), rank0, "s={}", row.s);
        }
        let top = t.row(g).unwrap();
        let lead = top.coeff(&Monomial::new(1..=g).unwrap());
        assert!(lead.is_equivalent(&GwElement::one()), "{}: leading coefficient {lead}", t.polygon);
        for m in top.monomials().map(|(m, _)| m) {
            assert!(m.degree() <= g as usize);
        }
    }
}

#[test]
fn rational_extensions_recover_row_zero() {
    for t in tables() {
        let base = t.row(0).unwrap().constant_term();
        for row in &t.rows {
            let ones: BTreeMap<u32, i64> = row.value.indices().into_iter().map(|i| (i, 1)).collect();
            let v = row.value.specialize(&ones).unwrap();
            assert!(v.is_equivalent(&base), "s={}: {v}", row.s);
        }
    }
}

#[test]
fn welschinger_ladder() {
    let tables = tables();
    let negative = |p: &BetaPolynomial| {
        let signs = p.indices().into_iter().map(|i| (i, ExtensionSign::Negative)).collect();
        p.signature_profile(&signs).unwrap()
    };
    let plane: Vec<i64> = table(&tables, "p2:4").rows.iter().map(|r| negative(&r.value)).collect();
    let sigma: Vec<i64> = table(&tables, "F1_4_2E").rows.iter().map(|r| negative(&r.value)).collect();
    // Welschinger invariants of quartics with s conjugate pairs
    assert_eq!(plane, [240, 144, 80, 40, 16, 0]);
    assert_eq!(sigma, [48, 32, 20, 12, 8]);
    for s in 0..5 {
        assert_eq!(plane[s] - plane[s + 1], 2 * sigma[s]);
    }
    // negative c concretely: c = -1 for every pair
    for row in &table(&tables, "p2:4").rows {
        let assignment = row.value.indices().into_iter().map(|i| (i, -1)).collect();
        assert_eq!(row.value.specialize(&assignment).unwrap().signature(), plane[row.s as usize]);
    }
}

#[test]
fn empty_interior_table_is_constant() {
    let t = build_tables(&SurfaceChain::parse("Bl2F1").unwrap()).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t[0].rows.len(), 3);
    for row in &t[0].rows {
        assert_eq!(row.value, BetaPolynomial::constant(GwElement::one()));
    }
}

#[test]
fn single_steps() {
    let step = |x: &str, blow: &str, i| {
        wall_cross_step(&parse_gw_expression(x).unwrap(), &parse_gw_expression(blow).unwrap(), i)
    };
    let got = step("2h + 8*<1>", "<1>", 1).unwrap();
    assert_eq!(got, parse_gw_expression("2h + 6*<1> + b1").unwrap());
    let got = step("190h + 240*<1>", "24h + 48*<1>", 1).unwrap();
    assert_eq!(got, parse_gw_expression("190h + 144*<1> + 48*b1").unwrap());
    assert!(matches!(step("b1", "<1>", 1), Err(Error::IndexCollision(1))));
}

#[test]
fn chains_validate() {
    let q = SurfaceChain::quartic();
    assert_eq!(q.len(), 4);
    assert_eq!(SurfaceChain::parse("F1_4_2E").unwrap().len(), 3);
    assert!(SurfaceChain::new(vec![preset("p2:4").unwrap(), preset("BlF1").unwrap()]).is_err());
    assert!(SurfaceChain::parse("p2:4, BlF1, Bl2F1").is_err());
    let greedy = SurfaceChain::from_start(preset("p2:3").unwrap()).unwrap();
    assert_eq!(greedy.len(), 2);
    assert!(greedy.polygons().iter().all(|p| p.is_smooth()));
}
