//! Acceptance criteria 1 to 11. Each prints one PASS/FAIL line; the run
//! exits non-zero if any criterion fails or exceeds its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, ToPrimitive};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, RngAlgorithm, TestRunner};

use quiver_moduli::counting::{counting_report, euler_linear_term_check, simple_count_poly, sst_count_poly, stable_count_poly};
use quiver_moduli::existence::{simple_nonempty, ExistenceOracle, SstMethod};
use quiver_moduli::framed::{
    build_framed_with_scale, count_forests, default_scale, forest_genfun, hilb_betti, smooth_model_poincare,
};
use quiver_moduli::hn::{betti_coprime, HnKernel, HnMethod};
use quiver_moduli::oracle::{entry_count, hn_filtration, hn_filtration_in_order, rep_at, verify, DEFAULT_BUDGET};
use quiver_moduli::quiver::{theta_coprime, Arrow};
use quiver_moduli::roots::reflect;
use quiver_moduli::{DimVector, Error, Poly, Product, Quiver, RatFunc, SeriesShape, Slope, Stability, TwistedSeries};

type Outcome = std::result::Result<String, String>;

fn dv(v: &[i64]) -> DimVector {
    DimVector::new(v.to_vec()).unwrap()
}

fn sub_theta(m: usize) -> Stability {
    let mut v = vec![0; m + 1];
    v[m] = -1;
    Stability::new(v)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn at_one(p: &Poly) -> BigInt {
    p.eval(&BigRational::one()).to_integer()
}

fn criterion(n: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    let took = t.elapsed();
    let (pass, detail) = match res {
        Ok(_) if took > budget => (false, format!("took {:.1}s, budget {}s", took.as_secs_f64(), budget.as_secs())),
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    println!(
        "criterion {n:>2}: {} {title} [{:.2}s] {detail}",
        if pass { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    pass
}

fn q(k: i64) -> RatFunc {
    RatFunc::q_pow(k)
}

fn one() -> RatFunc {
    RatFunc::one()
}

fn loop_simple_counts() -> Outcome {
    for m in 1..=3i64 {
        let lm = Quiver::loop_quiver(m as usize).unwrap();
        let a1 = q(m);
        let a2 = &(&(&q(2 * m) * &(&q(m) - &one())) * &(&q(m - 1) - &one())) / &(&q(2) - &one());
        let inner = &(&(&q(2 * m - 2) * &(&q(m) + &one())) - &(&q(m - 2) * &(&(&q(1) + &one()) * &(&q(1) + &one()))))
            + &(&q(1) + &one());
        let num = &(&(&q(3 * m + 1) * &(&q(m) - &one())) * &(&q(2 * m - 2) - &one())) * &inner;
        let a3 = &num / &(&(&q(3) - &one()) * &(&q(2) - &one()));
        for (k, expect) in [(1, a1), (2, a2), (3, a3)] {
            let got = RatFunc::from_poly(simple_count_poly(&lm, &dv(&[k])).unwrap());
            ensure(got == expect, || format!("L_{m} d={k}: got {got}, expected {expect}"))?;
        }
    }
    Ok("a_1..a_3 for m = 1..3".into())
}

fn k5_semistable() -> Outcome {
    let k5 = Quiver::kronecker(5).unwrap();
    let got = sst_count_poly(&k5, &Stability::new(vec![1, 0]), &dv(&[2, 2])).unwrap();
    let expect = Poly::from_i64(&[1, 1, 1, 1, 0, 0, -1, 1, 1, 3, 2, 3, 1, 1]);
    ensure(got == expect, || format!("got {got}"))?;
    Ok(got.to_string())
}

fn subspace_anchor() -> Outcome {
    let s4 = Quiver::subspace(4).unwrap();
    let d = dv(&[1, 1, 1, 1, 2]);
    let st = stable_count_poly(&s4, &sub_theta(4), &d).unwrap();
    let sst = sst_count_poly(&s4, &sub_theta(4), &d).unwrap();
    ensure(st == Poly::from_i64(&[-2, 1]), || format!("stable {st}"))?;
    ensure(sst == Poly::from_i64(&[1, 1]), || format!("semistable {sst}"))?;
    Ok(format!("stable {st}, semistable {sst}"))
}

fn kronecker_euler() -> Outcome {
    let mut vals = Vec::new();
    for m in 3..=6i64 {
        let km = Quiver::kronecker(m as usize).unwrap();
        let b = betti_coprime(&km, &Stability::new(vec![1, 0]), &dv(&[2, 3])).unwrap();
        let chi = at_one(&b);
        let expect = m * (m - 1) * (3 * m * m - 5 * m + 1) / 6;
        ensure(chi == BigInt::from(expect), || format!("K_{m}: {chi} vs {expect}"))?;
        vals.push(chi.to_string());
    }
    Ok(format!("chi = {}", vals.join(", ")))
}

fn oracle_lattice() -> Outcome {
    let both = |m| (Quiver::kronecker(m).unwrap(), vec![Stability::new(vec![1, 0]), Stability::new(vec![0, 1]), Stability::zero(2)]);
    let cases = vec![
        both(1),
        both(2),
        (Quiver::loop_quiver(1).unwrap(), vec![Stability::zero(1)]),
        (Quiver::loop_quiver(2).unwrap(), vec![Stability::zero(1)]),
    ];
    let (mut run, mut skip) = (0, 0);
    for (qv, thetas) in &cases {
        for th in thetas {
            for d in DimVector::all_up_to(qv.num_vertices(), 4) {
                for p in [2, 3] {
                    match verify(qv, th, &d, p, DEFAULT_BUDGET) {
                        Ok(r) => {
                            run += 1;
                            if let Some(c) = r.checks.iter().find(|c| !c.pass) {
                                return Err(format!("{:?} {th:?} {d} q={p}: {} expected {} got {}", qv.vertices(), c.name, c.expected, c.actual));
                            }
                        }
                        Err(Error::SizeGuard(_)) => skip += 1,
                        Err(e) => return Err(e.to_string()),
                    }
                }
            }
        }
    }
    Ok(format!("{run} cases certified, {skip} over budget"))
}

fn cross_agreement() -> Outcome {
    let mut n = 0;
    let hn_cases = [
        (Quiver::kronecker(1).unwrap(), Stability::new(vec![1, 0])),
        (Quiver::kronecker(2).unwrap(), Stability::new(vec![1, 0])),
        (Quiver::kronecker(3).unwrap(), Stability::new(vec![1, 0])),
        (Quiver::kronecker(3).unwrap(), Stability::new(vec![0, 1])),
        (Quiver::loop_quiver(2).unwrap(), Stability::zero(1)),
        (Quiver::subspace(3).unwrap(), sub_theta(3)),
    ];
    for (qv, th) in &hn_cases {
        let k = HnKernel::new(qv, th).unwrap();
        for d in DimVector::all_up_to(qv.num_vertices(), 6) {
            ensure(k.p(&d, HnMethod::Direct).unwrap() == k.p(&d, HnMethod::Recursive).unwrap(), || format!("hn methods {d}"))?;
            n += 1;
        }
    }
    let mut ex_cases = Vec::new();
    for m in 1..=5 {
        ex_cases.push((Quiver::kronecker(m).unwrap(), Stability::new(vec![1, 0])));
        ex_cases.push((Quiver::kronecker(m).unwrap(), Stability::new(vec![0, 1])));
    }
    for m in 1..=3 {
        ex_cases.push((Quiver::loop_quiver(m).unwrap(), Stability::zero(1)));
    }
    for m in 3..=5 {
        ex_cases.push((Quiver::subspace(m).unwrap(), sub_theta(m)));
    }
    for (qv, th) in &ex_cases {
        let o = ExistenceOracle::new(qv, th).unwrap();
        for d in DimVector::all_up_to(qv.num_vertices(), 8) {
            let (a, b) = (o.sst_nonempty(&d, SstMethod::Schofield).unwrap(), o.sst_nonempty(&d, SstMethod::Hn).unwrap());
            ensure(a == b, || format!("sst methods {:?} {d}", qv.vertices()))?;
            n += 1;
        }
    }
    let mut count_cases = Vec::new();
    for m in 1..=3 {
        count_cases.push((Quiver::kronecker(m).unwrap(), Stability::new(vec![1, 0]), 5));
        count_cases.push((Quiver::loop_quiver(m).unwrap(), Stability::zero(1), 5));
    }
    for m in 3..=4 {
        count_cases.push((Quiver::subspace(m).unwrap(), sub_theta(m), 6));
    }
    for (qv, th, bound) in &count_cases {
        let o = ExistenceOracle::new(qv, th).unwrap();
        for d in DimVector::all_up_to(qv.num_vertices(), *bound) {
            let r = counting_report(qv, th, &d).unwrap();
            ensure(o.st_nonempty(&d).unwrap() == !r.stable.is_zero(), || format!("stable {:?} {d}", qv.vertices()))?;
            ensure(o.sst_nonempty(&d, SstMethod::Schofield).unwrap() == !r.semistable.is_zero(), || format!("semistable {d}"))?;
            ensure(simple_nonempty(qv, &d).unwrap() == !simple_count_poly(qv, &d).unwrap().is_zero(), || format!("simple {d}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} comparisons"))
}

fn hilbert_triangle() -> Outcome {
    let cases = vec![
        (Quiver::loop_quiver(1).unwrap(), vec![vec![1], vec![2]]),
        (Quiver::loop_quiver(2).unwrap(), vec![vec![1], vec![2]]),
        (Quiver::loop_quiver(3).unwrap(), vec![vec![1], vec![2]]),
        (Quiver::kronecker(1).unwrap(), vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        (Quiver::kronecker(2).unwrap(), vec![vec![1, 0], vec![0, 1]]),
        (Quiver::subspace(3).unwrap(), vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![1, 1, 1, 0]]),
    ];
    let mut n = 0;
    for (qv, ns) in &cases {
        for nv in ns {
            let nv = dv(nv);
            let g = forest_genfun(qv, &nv, 6).unwrap();
            for d in DimVector::all_up_to(qv.num_vertices(), 6) {
                let h = at_one(&hilb_betti(qv, &d, &nv).unwrap());
                let c = BigInt::from(count_forests(qv, &d, &nv).unwrap());
                let coeff = g.get(&d);
                ensure(h == c, || format!("{:?} {d} n={nv}: betti {h} forests {c}", qv.vertices()))?;
                ensure(coeff == RatFunc::constant(BigRational::from_integer(c.clone())), || format!("genfun {d}: {coeff}"))?;
                n += 1;
            }
        }
    }
    let l2 = Quiver::loop_quiver(2).unwrap();
    let worked = hilb_betti(&l2, &dv(&[2]), &dv(&[1])).unwrap();
    ensure(worked == Poly::from_i64(&[0, 0, 0, 0, 0, 1, 1]), || format!("L_2 d=2 n=1: {worked}"))?;
    Ok(format!("{n} triples, L_2 worked value {worked}"))
}

fn smooth_models() -> Outcome {
    let mut n = 0;
    for (qv, ns) in [
        (Quiver::loop_quiver(1).unwrap(), vec![vec![1], vec![2]]),
        (Quiver::loop_quiver(2).unwrap(), vec![vec![1], vec![2]]),
        (Quiver::kronecker(1).unwrap(), vec![vec![1, 0], vec![1, 1]]),
        (Quiver::kronecker(2).unwrap(), vec![vec![1, 0]]),
    ] {
        let zero = Stability::zero(qv.num_vertices());
        for nv in ns {
            let nv = dv(&nv);
            for d in DimVector::all_up_to(qv.num_vertices(), 3) {
                if d.is_zero() {
                    continue;
                }
                let s = smooth_model_poincare(&qv, &zero, &d, &nv).unwrap();
                ensure(s == hilb_betti(&qv, &d, &nv).unwrap(), || format!("Θ=0 {:?} {d} n={nv}", qv.vertices()))?;
                n += 1;
            }
        }
    }
    let k2 = Quiver::kronecker(2).unwrap();
    let k3 = Quiver::kronecker(3).unwrap();
    let s3 = Quiver::subspace(3).unwrap();
    let th = Stability::new(vec![1, 0]);
    let framed_cases = [
        (&k2, th.clone(), dv(&[1, 1]), dv(&[1, 0])),
        (&k2, th.clone(), dv(&[2, 2]), dv(&[0, 1])),
        (&k2, th.clone(), dv(&[1, 2]), dv(&[1, 1])),
        (&k3, th.clone(), dv(&[1, 2]), dv(&[1, 0])),
        (&s3, sub_theta(3), dv(&[1, 1, 1, 2]), dv(&[0, 0, 0, 1])),
        (&s3, sub_theta(3), dv(&[1, 1, 1, 1]), dv(&[1, 0, 0, 0])),
    ];
    for (qv, th, d, nv) in &framed_cases {
        let smooth = smooth_model_poincare(qv, th, d, nv).unwrap();
        for extra in [0, 7] {
            let f = build_framed_with_scale(qv, d, th, nv, default_scale(th, d) + extra).unwrap();
            let b = betti_coprime(&f.extended, &f.extended_theta, &f.extended_d).unwrap();
            ensure(b == smooth, || format!("framed {:?} {d} n={nv} N+{extra}: {b} vs {smooth}", qv.vertices()))?;
            n += 1;
        }
        if theta_coprime(qv, th, d).unwrap() {
            let nd: i64 = nv.as_slice().iter().zip(d.as_slice()).map(|(a, b)| a * b).sum();
            let expect = &betti_coprime(qv, th, d).unwrap() * &Poly::geometric(nd as usize);
            ensure(smooth == expect, || format!("coprime factor {d} n={nv}: {smooth} vs {expect}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} identities"))
}

fn growth_ratio() -> Outcome {
    let l2 = Quiver::loop_quiver(2).unwrap();
    let chi = |d: i64| count_forests(&l2, &dv(&[d]), &dv(&[1])).unwrap().to_f64().unwrap();
    let d: f64 = 20.0;
    let ratio = chi(21) / chi(20) * ((d + 1.0) / d).powf(1.5);
    ensure((ratio - 4.0).abs() / 4.0 < 0.02, || format!("ratio {ratio}"))?;
    Ok(format!("ratio {ratio:.4}"))
}

fn primitive_cycles() -> Outcome {
    let mut n = 0;
    for m in 1..=3 {
        let lm = Quiver::loop_quiver(m).unwrap();
        for k in 1..=3 {
            let c = euler_linear_term_check(&lm, &dv(&[k]), k == 1).unwrap();
            ensure(c.holds, || format!("L_{m} d={k}: {c:?}"))?;
            n += 1;
        }
    }
    let c3 = Quiver::cyclic(3).unwrap();
    let c = euler_linear_term_check(&c3, &dv(&[1, 1, 1]), false).unwrap();
    ensure(c.holds, || format!("3-cycle: {c:?}"))?;
    Ok(format!("{} checks", n + 1))
}

// Property suites.

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn coeff() -> impl Strategy<Value = RatFunc> {
    (prop::collection::vec(-3i64..4, 1..3), prop::collection::vec(-2i64..3, 0..2)).prop_map(|(n, d)| {
        let mut den = vec![1];
        den.extend(d);
        RatFunc::new(Poly::from_i64(&n), Poly::from_i64(&den)).unwrap()
    })
}

fn series(shape: SeriesShape, constant: Option<RatFunc>) -> impl Strategy<Value = TwistedSeries> {
    let keys: Vec<DimVector> = shape.keys().into_iter().filter(|k| !k.is_zero()).collect();
    prop::collection::vec(prop::option::weighted(0.6, coeff()), keys.len()).prop_map(move |cs| {
        let mut s = TwistedSeries::zero(&shape);
        if let Some(c) = &constant {
            s.set(DimVector::zero(shape.quiver().num_vertices()), c.clone()).unwrap();
        }
        for (k, c) in keys.iter().zip(cs) {
            if let Some(c) = c {
                s.set(k.clone(), c).unwrap();
            }
        }
        s
    })
}

fn vec_in(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, n)
}

fn nonzero_dim(n: usize, hi: i64) -> impl Strategy<Value = DimVector> {
    vec_in(n, 0, hi).prop_filter("non-zero", |v| v.iter().any(|&x| x > 0)).prop_map(|v| DimVector::new(v).unwrap())
}

fn loopless_quiver() -> impl Strategy<Value = Quiver> {
    prop::collection::vec((0usize..3, 0usize..3), 0..6).prop_map(|pairs| {
        let arrows = pairs.into_iter().filter(|(s, t)| s != t).map(|(source, target)| Arrow { source, target }).collect();
        Quiver::new(vec!["a".into(), "b".into(), "c".into()], arrows).unwrap()
    })
}

fn acyclic_quiver() -> impl Strategy<Value = Quiver> {
    prop::collection::vec((0usize..3, 0usize..3), 0..5).prop_map(|pairs| {
        let arrows = pairs.into_iter().filter(|(s, t)| s < t).map(|(source, target)| Arrow { source, target }).collect();
        Quiver::new(vec!["a".into(), "b".into(), "c".into()], arrows).unwrap()
    })
}

type Check = std::result::Result<(), TestCaseError>;

fn suite(name: &str, cases: u32, f: impl FnOnce(&mut TestRunner) -> std::result::Result<(), String>) -> std::result::Result<String, String> {
    let mut r = runner(cases);
    f(&mut r).map_err(|e| format!("{name}: {e}"))?;
    Ok(format!("{name} x{cases}"))
}

fn property_suites() -> Outcome {
    let mut done = Vec::new();
    let k2 = Quiver::kronecker(2).unwrap();
    let k2_shape = SeriesShape::new(&k2, 4).with_slope(Stability::new(vec![1, 0]), Slope::new(1, 2));
    let l2_shape = SeriesShape::new(&Quiver::loop_quiver(2).unwrap(), 4);
    done.push(suite("exp/log", 100, |r| {
        r.run(&(series(k2_shape.clone(), None), series(l2_shape.clone(), Some(RatFunc::one()))), |(a, b)| -> Check {
            prop_assert_eq!(a.plethystic_exp().unwrap().plethystic_log().unwrap(), a);
            prop_assert_eq!(b.plethystic_log().unwrap().plethystic_exp().unwrap(), b);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    let k1_shape = SeriesShape::new(&Quiver::kronecker(1).unwrap(), 3);
    done.push(suite("twisted associativity", 100, |r| {
        let s = || series(k1_shape.clone(), Some(RatFunc::one()));
        r.run(&(s(), s(), s()), |(a, b, c)| -> Check {
            let left = a.twisted_mul(&b).unwrap().twisted_mul(&c).unwrap();
            let right = a.twisted_mul(&b.twisted_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            let inv = a.inverse(Product::Twisted).unwrap();
            prop_assert_eq!(a.twisted_mul(&inv).unwrap(), TwistedSeries::one(&k1_shape));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    done.push(suite("seesaw", 500, |r| {
        r.run(&(vec_in(3, -5, 5), nonzero_dim(3, 4), nonzero_dim(3, 4)), |(t, d, e)| -> Check {
            let th = Stability::new(t);
            let (md, me, mde) = (th.slope(&d).unwrap(), th.slope(&e).unwrap(), th.slope(&d.add(&e)).unwrap());
            prop_assert!((md <= mde) == (md <= me) && (md <= me) == (mde <= me));
            prop_assert!((md < mde) == (md < me) && (md < me) == (mde < me));
            prop_assert!(md.min(me) <= mde && mde <= md.max(me));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    done.push(suite("reflection involution", 300, |r| {
        r.run(&(loopless_quiver(), 0usize..3, vec_in(3, -4, 4), vec_in(3, -4, 4)), |(qv, i, d, e)| -> Check {
            let sd = reflect(&qv, i, &d).unwrap();
            prop_assert_eq!(reflect(&qv, i, &sd).unwrap(), d.clone());
            let se = reflect(&qv, i, &e).unwrap();
            prop_assert_eq!(qv.symmetric_form_z(&sd, &se), qv.symmetric_form_z(&d, &e));
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    let hn_cases = [(Quiver::kronecker(1).unwrap(), Stability::new(vec![1, 0])),
        (Quiver::kronecker(2).unwrap(), Stability::new(vec![1, 0])),
        (Quiver::kronecker(2).unwrap(), Stability::new(vec![0, 1])),
        (Quiver::loop_quiver(1).unwrap(), Stability::zero(1)),
        (Quiver::subspace(3).unwrap(), sub_theta(3))];
    done.push(suite("hn uniqueness", 200, |r| {
        let strat = (0..hn_cases.len(), prop::sample::select(vec![2u32, 3]), any::<u64>(), any::<u64>(), vec_in(4, 0, 2));
        r.run(&strat, |(c, p, pick, seed, raw)| -> Check {
            let (qv, th) = &hn_cases[c];
            let d = DimVector::new(raw[..qv.num_vertices()].to_vec()).unwrap();
            if d.is_zero() || d.total() > 4 {
                return Ok(());
            }
            let size = (p as u64).pow(entry_count(qv, &d));
            let m = rep_at(qv, p, &d, pick % size);
            let base = hn_filtration(qv, &m, th).unwrap();
            prop_assert!(base.unique && base.slopes_decrease(th));
            prop_assert_eq!(hn_filtration_in_order(qv, &m, th, Some(seed)).unwrap(), base);
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    done.push(suite("normalization invariance", 100, |r| {
        r.run(&(acyclic_quiver(), vec_in(3, -3, 3), nonzero_dim(3, 2), 1i64..4, -3i64..4), |(qv, t, d, c, s)| -> Check {
            if d.total() > 4 {
                return Ok(());
            }
            let th = Stability::new(t);
            for other in [th.scaled(c), th.shifted(s)] {
                prop_assert_eq!(theta_coprime(&qv, &th, &d).unwrap(), theta_coprime(&qv, &other, &d).unwrap());
                let (a, b) = (HnKernel::new(&qv, &th).unwrap(), HnKernel::new(&qv, &other).unwrap());
                prop_assert_eq!(a.p(&d, HnMethod::Recursive).unwrap(), b.p(&d, HnMethod::Recursive).unwrap());
                let (ra, rb) = (counting_report(&qv, &th, &d).unwrap(), counting_report(&qv, &other, &d).unwrap());
                prop_assert_eq!(&ra.stable, &rb.stable);
                prop_assert_eq!(&ra.semistable, &rb.semistable);
                let (oa, ob) = (ExistenceOracle::new(&qv, &th).unwrap(), ExistenceOracle::new(&qv, &other).unwrap());
                prop_assert_eq!(oa.sst_nonempty(&d, SstMethod::Schofield).unwrap(), ob.sst_nonempty(&d, SstMethod::Schofield).unwrap());
                prop_assert_eq!(oa.st_nonempty(&d).unwrap(), ob.st_nonempty(&d).unwrap());
                if theta_coprime(&qv, &th, &d).unwrap() {
                    prop_assert_eq!(a.betti_coprime(&d).unwrap(), b.betti_coprime(&d).unwrap());
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    })?);

    Ok(done.join(", "))
}

fn main() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "simple counts of loop quivers", s(10), loop_simple_counts),
        criterion(2, "semistable count K_5 (2,2)", s(30), k5_semistable),
        criterion(3, "subspace quiver S_4 anchor", s(10), subspace_anchor),
        criterion(4, "Euler characteristics K_m (2,3)", s(60), kronecker_euler),
        criterion(5, "finite-field oracle certification", s(600), oracle_lattice),
        criterion(6, "method cross-agreement", s(300), cross_agreement),
        criterion(7, "Hilbert scheme triangle", s(120), hilbert_triangle),
        criterion(8, "smooth model coherence", s(300), smooth_models),
        criterion(9, "forest growth ratio", s(5), growth_ratio),
        criterion(10, "primitive cycles and linear terms", s(60), primitive_cycles),
        criterion(11, "property suites", s(600), property_suites),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, p)| !**p).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
