#![allow(dead_code)]

pub mod local;
pub mod tropical;
