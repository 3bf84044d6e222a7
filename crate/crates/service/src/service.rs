use std::future::Future;
use std::sync::Arc;
use std::time::Instant;

use axum::body::Body;
use axum::extract::{Request, State};
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::middleware::{self, Next};
use axum::response::{IntoResponse, Response};
use axum::routing::get;
use axum::Router;
use pps_core::{parse_path, ResolveResponse};
use tokio::net::TcpListener;
use tower_http::services::ServeDir;

use crate::negotiate::{preferred, Representation};
use crate::ResolverConfig;

/// Page served for HTML requests when no web-map bundle is configured.
pub const PLACEHOLDER_PAGE: &str = "<!DOCTYPE html>
<html lang=\"en\">
<head>
<meta charset=\"utf-8\">
<meta name=\"referrer\" content=\"no-referrer\">
<title>Pingmark</title>
</head>
<body>
<h1>Pingmark</h1>
<p>The map viewer is not installed on this resolver. Request this URL with
<code>Accept: application/json</code> for the point and its map links.</p>
</body>
</html>
";

/// Immutable per-process state shared by all requests.
struct Shared {
    cache_control: HeaderValue,
    page: String,
}

pub fn router(config: &ResolverConfig) -> Router {
    let page = config
        .static_dir
        .as_ref()
        .and_then(|dir| std::fs::read_to_string(dir.join("index.html")).ok())
        .unwrap_or_else(|| PLACEHOLDER_PAGE.to_owned());
    let shared = Arc::new(Shared {
        cache_control: HeaderValue::from_str(&config.cache_control())
            .expect("cache-control is ASCII"),
        page,
    });

    let mut app = Router::new().route("/health", get(health));
    if let Some(dir) = &config.static_dir {
        app = app.nest_service("/assets", ServeDir::new(dir));
    }
    app.fallback(resolve)
        .with_state(shared.clone())
        .layer(middleware::from_fn_with_state(shared, response_policy))
}

/// Serves until `shutdown` resolves.
pub async fn serve(
    listener: TcpListener,
    config: &ResolverConfig,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> std::io::Result<()> {
    tracing::info!(base_host = %config.base_host, cache_ttl = config.cache_ttl_seconds, "resolver ready");
    axum::serve(listener, router(config))
        .with_graceful_shutdown(shutdown)
        .await
}

// Cache-Control on everything, no cookies, and an access log line that
// never includes the request path.
async fn response_policy(
    State(shared): State<Arc<Shared>>,
    request: Request,
    next: Next,
) -> Response {
    let started = Instant::now();
    let method = request.method().clone();
    let mut response = next.run(request).await;
    let headers = response.headers_mut();
    headers.insert(header::CACHE_CONTROL, shared.cache_control.clone());
    headers.remove(header::SET_COOKIE);
    tracing::info!(
        target: "pingmark::access",
        method = %method,
        status = response.status().as_u16(),
        latency_us = started.elapsed().as_micros() as u64,
    );
    response
}

async fn health() -> Response {
    json_response(StatusCode::OK, r#"{"status":"ok"}"#.to_owned())
}

async fn resolve(State(shared): State<Arc<Shared>>, request: Request) -> Response {
    let path = request.uri().path();
    if !is_resolve_route(path) {
        return (StatusCode::NOT_FOUND, "not found\n").into_response();
    }
    let method = request.method();
    if method != Method::GET && method != Method::HEAD {
        let mut response = (StatusCode::METHOD_NOT_ALLOWED, "method not allowed\n").into_response();
        response
            .headers_mut()
            .insert(header::ALLOW, HeaderValue::from_static("GET, HEAD"));
        return response;
    }
    let wants = preferred(
        request
            .headers()
            .get(header::ACCEPT)
            .and_then(|v| v.to_str().ok()),
    );

    let mut response = match parse_path::<f64>(path) {
        Ok((coordinate, timestamp)) => match wants {
            Representation::Json => {
                let body = serde_json::to_string(&ResolveResponse::new(&coordinate, timestamp))
                    .expect("response serializes");
                json_response(StatusCode::OK, body)
            }
            Representation::Html => html_response(shared.page.clone()),
        },
        Err(err) => error_response(&err, wants),
    };
    if method == Method::HEAD {
        *response.body_mut() = Body::empty();
    }
    response
}

/// Two or three non-reserved path segments, as in `/<lat>/<lon>[/<ts>]`.
/// Everything else is an unknown route rather than a malformed link.
fn is_resolve_route(path: &str) -> bool {
    let body = path.strip_prefix('/').unwrap_or(path);
    let body = body.strip_suffix('/').unwrap_or(body);
    let segments = body.split('/').count();
    let reserved = matches!(body.split('/').next(), Some("assets" | "health"));
    (2..=3).contains(&segments) && !reserved
}

fn status_for(err: &pps_core::Error) -> StatusCode {
    match err {
        pps_core::Error::MalformedLink(_) | pps_core::Error::InvalidHost(_) => {
            StatusCode::BAD_REQUEST
        }
        pps_core::Error::OutOfRange(_)
        | pps_core::Error::BadTimestamp(_)
        | pps_core::Error::InvalidCoordinate(_) => StatusCode::UNPROCESSABLE_ENTITY,
    }
}

fn error_response(err: &pps_core::Error, wants: Representation) -> Response {
    let status = status_for(err);
    match wants {
        Representation::Json => {
            let body = serde_json::json!({ "error": err.code(), "message": err.to_string() });
            json_response(status, body.to_string())
        }
        Representation::Html => (status, format!("{}: {err}\n", err.code())).into_response(),
    }
}

fn json_response(status: StatusCode, body: String) -> Response {
    (
        status,
        [(
            header::CONTENT_TYPE,
            HeaderValue::from_static("application/json"),
        )],
        body,
    )
        .into_response()
}

fn html_response(page: String) -> Response {
    (
        StatusCode::OK,
        [(
            header::CONTENT_TYPE,
            HeaderValue::from_static("text/html; charset=utf-8"),
        )],
        page,
    )
        .into_response()
}
