import ipaddress
import logging

from flask import Flask, abort, jsonify, request

from errors import UsageError, VintvError
from interval_core import Direction
from settings import configure_logging, load_settings
from tracing import ALGORITHM_NAMES, render_event, trace_interval, traced_run
from vector_interval import VectorData

settings = load_settings()
configure_logging(settings.log_level)
logger = logging.getLogger(__name__)

app = Flask(__name__)
app.config['TRACE_LIMIT'] = settings.trace_limit

# Configure allowed IP addresses/CIDR ranges
ALLOWED_IPS = list(settings.allowed_ips)


def is_ip_allowed(ip_address):
    """Check if the IP address is in the allowed list"""
    try:
        client_ip = ipaddress.ip_address(ip_address)
        for allowed_range in ALLOWED_IPS:
            if client_ip in ipaddress.ip_network(allowed_range, strict=False):
                return True
        return False
    except ValueError:
        return False


@app.before_request
def limit_remote_addr():
    """Reject clients outside ALLOWED_IPS; /health stays open for health checks."""
    client_ip = request.environ.get('HTTP_X_FORWARDED_FOR', request.remote_addr)
    if client_ip:
        # behind a proxy the first hop is the client
        client_ip = client_ip.split(',')[0].strip()

    if request.endpoint == 'health':
        return

    if not is_ip_allowed(client_ip):
        logger.warning("rejected request from %s to %s", client_ip, request.path)
        abort(403)


@app.errorhandler(VintvError)
def handle_library_error(exc):
    return jsonify(error=exc.to_record()), exc.status


@app.route('/health', methods=['GET'])
def health():
    return jsonify(status="ok"), 200


def _json_body():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise UsageError("request body must be a JSON object")
    return data


def _vectors(data):
    vectors = []
    for key in ('a', 'b'):
        if key in data:
            if not isinstance(data[key], list):
                raise UsageError(f"'{key}' must be a list of numbers")
            vectors.append(VectorData(data[key]))
    return vectors


def _interval(data):
    if 'low' not in data and 'high' not in data:
        return None
    low, high = data.get('low'), data.get('high')
    # exact ints only: 1.9 and true are rejected
    if type(low) is not int or type(high) is not int:
        raise UsageError("'low' and 'high' must both be integers")
    return low, high


def _direction(data):
    if data.get('direction') is None:
        return None
    try:
        return Direction.parse(data['direction'])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _events_payload(events):
    return {"events": [event.to_record() for event in events]}


def _jsonable(value):
    return value.to_list() if isinstance(value, VectorData) else value


@app.route('/run/<algorithm>', methods=['POST'])
def run_algorithm(algorithm):
    data = _json_body()
    outcome = traced_run(algorithm, _vectors(data), _interval(data), _direction(data),
                         limit=app.config['TRACE_LIMIT'])
    if outcome.error is not None:
        body = {"algorithm": algorithm, "error": outcome.error.to_record()}
        if data.get('trace'):
            body.update(_events_payload(outcome.events))
        return jsonify(body), outcome.error.status
    body = {"algorithm": algorithm, "result": _jsonable(outcome.result)}
    if data.get('trace'):
        body.update(_events_payload(outcome.events))
    return jsonify(body), 200


@app.route('/trace-interval', methods=['POST'])
def trace_interval_route():
    data = _json_body()
    bounds = _interval(data)
    if bounds is None:
        raise UsageError("'low' and 'high' are required")
    events = trace_interval(*bounds, _direction(data) or Direction.RIGHT_TO_LEFT,
                            limit=app.config['TRACE_LIMIT'])
    body = _events_payload(events)
    body["lines"] = [render_event(event) for event in events]
    return jsonify(body), 200


@app.route('/algorithms', methods=['GET'])
def list_algorithms():
    return jsonify(algorithms=list(ALGORITHM_NAMES)), 200


if __name__ == '__main__':
    app.run(host=settings.host, debug=False, port=settings.port)
