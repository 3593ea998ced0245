//! Thread-local FFT plan cache. Each thread owns its planner, so lookups
//! need no synchronization and plans are reused across calls.

use std::any::{Any, TypeId};
use std::cell::RefCell;
use std::collections::HashMap;

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::scalar::Scalar;

thread_local! {
    static PLANNERS: RefCell<HashMap<TypeId, Box<dyn Any>>> = RefCell::new(HashMap::new());
}

pub(crate) fn fft_forward<T: Scalar>(buf: &mut [Complex<T>]) {
    PLANNERS.with(|cell| {
        let mut map = cell.borrow_mut();
        let planner = map
            .entry(TypeId::of::<T>())
            .or_insert_with(|| Box::new(FftPlanner::<T>::new()) as Box<dyn Any>)
            .downcast_mut::<FftPlanner<T>>()
            .expect("planner entry holds FftPlanner<T>");
        planner.plan_fft_forward(buf.len()).process(buf);
    });
}
