pub mod cli;
pub mod homocalc;
pub mod projector;
pub mod qring;
pub mod tangle;
pub mod twistlimit;
pub mod web;
